#pragma once

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "braidkit/errors.hpp"
#include "braidkit/normal_form.hpp"

namespace braid {

inline std::array<std::uint8_t, 32> sha256(const std::string& data) {
  std::array<std::uint8_t, 32> out{};
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  check_invariant(ctx != nullptr, "sha256: context allocation failed");
  bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
            EVP_DigestUpdate(ctx, data.data(), data.size()) == 1 &&
            EVP_DigestFinal_ex(ctx, out.data(), &len) == 1;
  EVP_MD_CTX_free(ctx);
  check_invariant(ok && len == 32, "sha256: digest failed");
  return out;
}

// h(b): hash of the canonical serialization, so equivalent braids hash equal
inline std::array<std::uint8_t, 32> braid_hash(const gnf& x) { return sha256(serialize(x)); }

// counter-mode extension to arbitrary length
inline std::vector<std::uint8_t> braid_keystream(const gnf& x, std::size_t nbytes) {
  std::vector<std::uint8_t> out;
  out.reserve(nbytes);
  const std::string base = serialize(x);
  for (std::uint64_t ctr = 0; out.size() < nbytes; ++ctr) {
    auto block = sha256(base + "#" + std::to_string(ctr));
    for (std::uint8_t b : block) {
      if (out.size() == nbytes) break;
      out.push_back(b);
    }
  }
  return out;
}

inline std::string hex(const std::uint8_t* data, std::size_t len) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(len * 2);
  for (std::size_t i = 0; i < len; ++i) {
    s.push_back(digits[data[i] >> 4]);
    s.push_back(digits[data[i] & 0xf]);
  }
  return s;
}

inline std::string hash_hex(const gnf& x) {
  auto h = braid_hash(x);
  return hex(h.data(), h.size());
}

}  // namespace braid
