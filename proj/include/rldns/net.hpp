#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rldns {

enum class Family : uint8_t { IPv4, IPv6 };

inline const char* to_string(Family f) { return f == Family::IPv4 ? "A" : "AAAA"; }

struct IPv4 {
  std::array<uint8_t, 4> octets{};

  auto operator<=>(const IPv4&) const = default;

  static std::optional<IPv4> parse(std::string_view text);
  std::string to_string() const;
};

struct IPv6 {
  std::array<uint8_t, 16> octets{};

  auto operator<=>(const IPv6&) const = default;

  static std::optional<IPv6> parse(std::string_view text);
  // RFC 5952 canonical form: lowercase hex, longest zero run compressed.
  std::string to_string() const;
};

class IpAddress {
 public:
  IpAddress() : addr_(IPv4{}) {}
  IpAddress(IPv4 v4) : addr_(v4) {}
  IpAddress(IPv6 v6) : addr_(v6) {}

  Family family() const { return is_v4() ? Family::IPv4 : Family::IPv6; }
  bool is_v4() const { return std::holds_alternative<IPv4>(addr_); }
  const IPv4& v4() const { return std::get<IPv4>(addr_); }
  const IPv6& v6() const { return std::get<IPv6>(addr_); }

  // Raw network-order bytes: 4 for IPv4, 16 for IPv6.
  std::vector<uint8_t> bytes() const;
  static std::optional<IpAddress> from_bytes(Family family, const uint8_t* data, size_t len);

  static std::optional<IpAddress> parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const IpAddress& a, const IpAddress& b) { return a.addr_ == b.addr_; }
  friend auto operator<=>(const IpAddress& a, const IpAddress& b) = default;

 private:
  std::variant<IPv4, IPv6> addr_;
};

// An address block: network address with host bits zeroed plus prefix length.
struct Subnet {
  IpAddress network;
  uint8_t prefix = 0;

  auto operator<=>(const Subnet&) const = default;

  uint8_t max_prefix() const { return network.is_v4() ? 32 : 128; }

  // Truncates `addr` to `prefix` bits, zeroing the host part.
  static Subnet of(const IpAddress& addr, uint8_t prefix);
  // "192.0.2.0/24" or "2001:db8::/56".
  static std::optional<Subnet> parse(std::string_view text);

  // True iff `addr` has the same family and its first `prefix` bits match.
  bool contains(const IpAddress& addr) const;

  std::string to_string() const;
};

// DNS hostname syntax: 1..253 octets, letter/digit/hyphen labels of 1..63
// octets, no leading or trailing hyphen per label.
bool is_valid_hostname(std::string_view name);

// Lowercases ASCII and strips at most one trailing dot. Does not validate.
std::string normalize_hostname(std::string_view name);

}  // namespace rldns
