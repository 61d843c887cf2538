#include "tdim/certificate.hpp"

#include <array>
#include <utility>

namespace tdim {

namespace {

constexpr std::array<std::pair<CertificateKind, std::string_view>, 7> kNames{{
    {CertificateKind::Clique, "Clique"},
    {CertificateKind::Diam2, "Diam2"},
    {CertificateKind::MinDegree, "MinDegree"},
    {CertificateKind::BallCount, "BallCount"},
    {CertificateKind::PairExclusion, "PairExclusion"},
    {CertificateKind::Exhaustive, "Exhaustive"},
    {CertificateKind::NonPath, "NonPath"},
}};

} // namespace

std::string_view to_string(CertificateKind k) {
  for (const auto &[kind, name] : kNames)
    if (kind == k)
      return name;
  return "Unknown";
}

std::optional<CertificateKind> certificate_kind_from_string(std::string_view s) {
  for (const auto &[kind, name] : kNames)
    if (name == s)
      return kind;
  return std::nullopt;
}

} // namespace tdim
