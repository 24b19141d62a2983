// Copyright 2026 The sdwanlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SDWANLAB_ADDRESS_H_
#define SDWANLAB_ADDRESS_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sdwanlab {

// IPv4-style address. Ordering is lexicographic on octets, which is the same
// as numeric ordering of the packed 32-bit value.
class NetAddress {
 public:
  constexpr NetAddress() = default;
  constexpr explicit NetAddress(uint32_t value) : value_(value) {}

  static constexpr NetAddress FromOctets(uint8_t a, uint8_t b, uint8_t c,
                                         uint8_t d) {
    return NetAddress((uint32_t{a} << 24) | (uint32_t{b} << 16) |
                      (uint32_t{c} << 8) | uint32_t{d});
  }

  // Accepts exactly four dotted decimal octets without leading '+' or spaces.
  static std::optional<NetAddress> Parse(std::string_view text);

  constexpr uint32_t value() const { return value_; }
  std::array<uint8_t, 4> octets() const;
  std::string ToString() const;

  friend constexpr auto operator<=>(NetAddress, NetAddress) = default;

 private:
  uint32_t value_ = 0;
};

// CIDR prefix; host bits below `length` are always zero.
class Prefix {
 public:
  constexpr Prefix() = default;

  // Masks off host bits of `address`.
  static Prefix Containing(NetAddress address, int length);
  // Canonical form only: "10.1.0.0/16" parses, "10.1.0.1/16" does not.
  static std::optional<Prefix> Parse(std::string_view text);

  NetAddress base() const { return base_; }
  int length() const { return length_; }
  uint32_t mask() const;

  bool Contains(NetAddress address) const;
  bool Contains(const Prefix& other) const;
  bool Overlaps(const Prefix& other) const;

  std::string ToString() const;

  friend auto operator<=>(const Prefix&, const Prefix&) = default;

 private:
  Prefix(NetAddress base, int length) : base_(base), length_(length) {}

  NetAddress base_;
  int length_ = 0;
};

// Address assigned to an interface together with its subnet length, written
// "10.4.0.2/30". Unlike Prefix, host bits are meaningful here.
struct InterfaceAddress {
  NetAddress address;
  int length = 32;

  static std::optional<InterfaceAddress> Parse(std::string_view text);

  Prefix subnet() const { return Prefix::Containing(address, length); }
  std::string ToString() const;

  friend auto operator<=>(const InterfaceAddress&,
                          const InterfaceAddress&) = default;
};

}  // namespace sdwanlab

#endif  // SDWANLAB_ADDRESS_H_
