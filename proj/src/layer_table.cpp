#include "kautz/layer_table.hpp"

#include "kautz/error.hpp"

namespace kautz {

namespace {

Count row_sum(const std::vector<Count>& row) {
  Count sum = 0;
  for (Count c : row) sum = checked_add(sum, c);
  return sum;
}

}  // namespace

LayerTable::LayerTable(int d, std::size_t diameter,
                       std::vector<std::vector<Count>> rows)
    : d_(d), diameter_(diameter), rows_(std::move(rows)) {
  if (rows_.size() != diameter_) {
    throw Error(ErrorCode::InvalidArgument, "layer table needs D rows");
  }
  Count cap = 1;
  for (std::size_t k = 1; k <= diameter_; ++k) {
    if (rows_[k - 1].size() != k) {
      throw Error(ErrorCode::InvalidArgument,
                  "layer " + std::to_string(k) + " needs k entries");
    }
    for (std::size_t t = 1; t <= k; ++t) {
      if (rows_[k - 1][t - 1] > cap) {
        throw Error(ErrorCode::InvariantViolation,
                    "N(" + std::to_string(k) + "," + std::to_string(t) +
                        ") = " + to_string(rows_[k - 1][t - 1]) +
                        " exceeds d^(k-1) = " + to_string(cap));
      }
    }
    cap = checked_mul(cap, static_cast<Count>(d_));
  }
  if (!trimming_chain_holds(*this)) {
    throw Error(ErrorCode::InvariantViolation,
                "trimming chain U_{k-1} >= (k-1)/(dk) U_k violated");
  }
}

Count LayerTable::u(std::size_t k) const { return row_sum(rows_.at(k - 1)); }

Count LayerTable::cong() const {
  Count total = 0;
  for (const auto& row : rows_) total = checked_add(total, row_sum(row));
  return total;
}

bool trimming_chain_holds(const LayerTable& table) {
  const auto d = static_cast<Count>(table.d());
  for (std::size_t k = 2; k <= table.diameter(); ++k) {
    // d k U_{k-1} >= (k-1) U_k
    BigInt lhs = to_bigint(table.u(k - 1)) * to_bigint(d) * k;
    BigInt rhs = to_bigint(table.u(k)) * (k - 1);
    if (lhs < rhs) return false;
  }
  return true;
}

bool telescoped_bound_holds(const LayerTable& table) {
  const std::size_t diameter = table.diameter();
  const BigInt ud = to_bigint(table.u(diameter));
  BigInt d_power = 1;  // d^(D-k)
  for (std::size_t k = diameter; k >= 1; --k) {
    // D d^(D-k) U_k >= k U_D
    if (to_bigint(table.u(k)) * diameter * d_power < ud * k) return false;
    d_power *= table.d();
  }
  return true;
}

}  // namespace kautz
