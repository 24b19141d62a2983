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

#include "sdwanlab/address.h"

#include <charconv>

namespace sdwanlab {
namespace {

std::optional<int> ParseDecimal(std::string_view text, int max) {
  if (text.empty() || text.size() > 3) return std::nullopt;
  if (text.size() > 1 && text.front() == '0') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  if (value < 0 || value > max) return std::nullopt;
  return value;
}

// Splits "a/b" into its two halves; nullopt when there is no single slash.
std::optional<std::pair<std::string_view, std::string_view>> SplitSlash(
    std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos ||
      text.find('/', slash + 1) != std::string_view::npos) {
    return std::nullopt;
  }
  return std::make_pair(text.substr(0, slash), text.substr(slash + 1));
}

uint32_t MaskFor(int length) {
  return length == 0 ? 0u : ~uint32_t{0} << (32 - length);
}

}  // namespace

std::optional<NetAddress> NetAddress::Parse(std::string_view text) {
  uint32_t value = 0;
  for (int i = 0; i < 4; ++i) {
    auto dot = text.find('.');
    std::string_view part = i < 3 ? text.substr(0, dot) : text;
    if (i < 3 && dot == std::string_view::npos) return std::nullopt;
    auto octet = ParseDecimal(part, 255);
    if (!octet) return std::nullopt;
    value = (value << 8) | static_cast<uint32_t>(*octet);
    if (i < 3) text.remove_prefix(dot + 1);
  }
  return NetAddress(value);
}

std::array<uint8_t, 4> NetAddress::octets() const {
  return {static_cast<uint8_t>(value_ >> 24), static_cast<uint8_t>(value_ >> 16),
          static_cast<uint8_t>(value_ >> 8), static_cast<uint8_t>(value_)};
}

std::string NetAddress::ToString() const {
  auto o = octets();
  return std::to_string(o[0]) + "." + std::to_string(o[1]) + "." +
         std::to_string(o[2]) + "." + std::to_string(o[3]);
}

Prefix Prefix::Containing(NetAddress address, int length) {
  if (length < 0) length = 0;
  if (length > 32) length = 32;
  return Prefix(NetAddress(address.value() & MaskFor(length)), length);
}

std::optional<Prefix> Prefix::Parse(std::string_view text) {
  auto parts = SplitSlash(text);
  if (!parts) return std::nullopt;
  auto base = NetAddress::Parse(parts->first);
  auto length = ParseDecimal(parts->second, 32);
  if (!base || !length) return std::nullopt;
  if ((base->value() & ~MaskFor(*length)) != 0) return std::nullopt;
  return Prefix(*base, *length);
}

uint32_t Prefix::mask() const { return MaskFor(length_); }

bool Prefix::Contains(NetAddress address) const {
  return (address.value() & mask()) == base_.value();
}

bool Prefix::Contains(const Prefix& other) const {
  return other.length_ >= length_ && Contains(other.base_);
}

bool Prefix::Overlaps(const Prefix& other) const {
  return Contains(other) || other.Contains(*this);
}

std::string Prefix::ToString() const {
  return base_.ToString() + "/" + std::to_string(length_);
}

std::optional<InterfaceAddress> InterfaceAddress::Parse(std::string_view text) {
  auto parts = SplitSlash(text);
  if (!parts) return std::nullopt;
  auto address = NetAddress::Parse(parts->first);
  auto length = ParseDecimal(parts->second, 32);
  if (!address || !length) return std::nullopt;
  return InterfaceAddress{*address, *length};
}

std::string InterfaceAddress::ToString() const {
  return address.ToString() + "/" + std::to_string(length);
}

}  // namespace sdwanlab
