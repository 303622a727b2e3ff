#include "kautz/bounds.hpp"

#include "kautz/error.hpp"

namespace kautz {

namespace {

AdmissibleOverlapSet overlaps_at(const KautzWord& word, std::size_t t) {
  // Positions past the middle have an empty candidate range.
  if (2 * t + 1 > word.size()) return {t, {}};
  return admissible_overlaps(word, t);
}

std::size_t last_position(std::size_t diameter) { return (diameter + 2) / 2; }

void require_sparse_regime(const KautzWord& word) {
  if (!is_unbordered(word)) {
    throw Error(ErrorCode::PreconditionViolated, "bordered: " + word.str());
  }
  if (!is_square_free(word)) {
    throw Error(ErrorCode::PreconditionViolated, "contains-square: " + word.str());
  }
}

Rational inverse_power(int d, std::size_t exponent) {
  BigInt den = 1;
  for (std::size_t i = 0; i < exponent; ++i) den *= d;
  return Rational(BigInt(1), den);
}

Rational omega_of(const KautzWord& word, int d,
                  std::map<std::size_t, AdmissibleOverlapSet>* sets) {
  const std::size_t diameter = word.size() - 1;
  Rational sum = 0;
  for (std::size_t t = 1; t <= last_position(diameter); ++t) {
    auto overlaps = overlaps_at(word, t);
    for (std::size_t r : overlaps.values) sum += inverse_power(d, r - t);
    if (sets) (*sets)[t] = std::move(overlaps);
  }
  return sum;
}

Rational power(int d, std::size_t exponent) {
  BigInt value = 1;
  for (std::size_t i = 0; i < exponent; ++i) value *= d;
  return Rational(value);
}

}  // namespace

Count makespan_tau(int d, std::size_t diameter) {
  if (d < 2 || diameter < 2) {
    throw Error(ErrorCode::InvalidArgument, "tau needs d >= 2 and D >= 2");
  }
  const auto base = static_cast<Count>(d);
  const Count low = checked_pow(base, static_cast<unsigned>(diameter - 2));
  return checked_add(checked_mul(diameter - 1, low),
                     checked_mul(diameter, checked_mul(low, base)));
}

Rational omega_d(const KautzWord& word, int d) {
  require_sparse_regime(word);
  return omega_of(word, d, nullptr);
}

SparsityReport weighted_sparsity(const KautzEdge& edge, Side side) {
  const KautzWord& word = edge.word();
  require_sparse_regime(word);
  const int d = edge.d();
  const std::size_t diameter = edge.diameter();

  std::map<std::size_t, AdmissibleOverlapSet> forward_sets;
  std::map<std::size_t, AdmissibleOverlapSet> reversed_sets;
  SparsityReport report{edge, side, Side::forward, {}, 0, 0, 0, 0, std::nullopt};
  report.omega_forward = omega_of(word, d, &forward_sets);
  report.omega_reversed = omega_of(word.reversed(), d, &reversed_sets);

  bool use_reversed = side == Side::reversed ||
                      (side == Side::two_sided_max &&
                       report.omega_reversed > report.omega_forward);
  report.realized = use_reversed ? Side::reversed : Side::forward;
  report.omega = use_reversed ? report.omega_reversed : report.omega_forward;
  report.per_position = use_reversed ? std::move(reversed_sets) : std::move(forward_sets);
  report.delta_bound = 2 * power(d, diameter - 1) * report.omega;
  if (d == 2 && diameter > 3) {
    report.sufficiency = report.omega < Rational(static_cast<long long>(diameter) - 3, 8);
  }
  return report;
}

bool sufficiency_check(const KautzEdge& edge, Side side) {
  if (edge.d() != 2) {
    throw Error(ErrorCode::WrongOutdegree, "the sufficiency test is stated for d = 2");
  }
  if (edge.diameter() <= 3) {
    throw Error(ErrorCode::PreconditionViolated, "the sufficiency test needs D > 3");
  }
  return *weighted_sparsity(edge, side).sufficiency;
}

BoundCertificate cong_lower_bound(Count ud, int d, std::size_t diameter) {
  if (d < 2 || diameter < 2) {
    throw Error(ErrorCode::InvalidArgument, "need d >= 2 and D >= 2");
  }
  BoundCertificate cert;
  cert.ud = ud;
  const auto dd = static_cast<long long>(d);
  const auto big_d = static_cast<long long>(diameter);
  cert.cong_lower = Rational(dd, dd - 1) * (1 - Rational(1, big_d * (dd - 1))) *
                    to_rational(ud);
  cert.tau = makespan_tau(d, diameter);
  cert.beats_tau = cert.cong_lower > to_rational(cert.tau);
  auto limits = thresholds(d);
  cert.c_d = limits.c_d;
  cert.d0 = limits.d0;
  return cert;
}

Thresholds thresholds(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "thresholds need d >= 2");
  const auto dd = static_cast<long long>(d);
  Rational d0 = Rational(8 * dd * dd + 2 * dd - 1, dd - 1);
  return {Rational(8, dd - 1), ceil(d0).convert_to<std::size_t>()};
}

UdBound ud_lower_bound(const KautzEdge& edge, Side side) {
  const auto report = weighted_sparsity(edge, side);
  const auto big_d = static_cast<long long>(edge.diameter());
  const Rational scale = power(edge.d(), edge.diameter() - 1);
  UdBound out;
  out.bound = ceil((Rational(big_d) - 2 * report.omega) * scale);
  if (is_74_plus_free(edge.word())) {
    out.universal = (Rational(big_d) - thresholds(edge.d()).c_d) * scale;
  }
  return out;
}

Count template_deficit_bound(const KautzWord& word, int d, std::size_t t) {
  const std::size_t diameter = word.size() - 1;
  Count total = 0;
  for (std::size_t r : overlaps_at(word, t).values) {
    total = checked_add(total, checked_pow(static_cast<Count>(d),
                                           static_cast<unsigned>(diameter - 1 - r + t)));
  }
  return total;
}

Rational geometric_deficit_bound(const KautzWord& word, int d, std::size_t t) {
  const auto overlaps = overlaps_at(word, t);
  if (overlaps.values.empty()) return 0;
  const std::size_t diameter = word.size() - 1;
  const std::size_t r0 = overlaps.values.front();
  return power(d, diameter - 1 - r0 + t) / (1 - inverse_power(d, t + 1));
}

}  // namespace kautz
