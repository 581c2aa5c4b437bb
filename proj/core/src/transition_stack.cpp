#include "efsm/transition_stack.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "efsm/error.hpp"

namespace efsm {

namespace {

// Stored additions larger than 2^kRebaseLimit relative to the current row
// scale trigger a rebase onto the scale of the addition.
constexpr int kRebaseLimit = 512;

}  // namespace

TransitionStack::TransitionStack(int actions, double phi, double eps_bar)
    : phi_(phi), eps_bar_(eps_bar), blocks_(static_cast<std::size_t>(actions)) {
  if (actions < 1) throw Error(Errc::config_error, "at least one action is required");
  if (!(phi >= 0.0 && phi <= 1.0)) throw Error(Errc::config_error, "phi must lie in [0, 1]");
  if (!(eps_bar > 0.0) || !std::isfinite(eps_bar))
    throw Error(Errc::config_error, "eps_bar must be positive");
}

void TransitionStack::check_action(int r) const {
  if (r < 1 || r > actions())
    throw Error(Errc::action_out_of_range,
                "action " + std::to_string(r) + " not in 1.." + std::to_string(actions()));
}

void TransitionStack::rescale_row(Block& b, std::size_t i, int shift) {
  for (double& x : b.f.row(i)) x = std::ldexp(x, shift);
  b.f_o[i] = std::ldexp(b.f_o[i], shift);
  b.exponent[i] += shift;
}

void TransitionStack::normalize_row(Block& b, std::size_t i) {
  const double total = b.f_o[i];
  if (!(total > 0.0)) return;
  const int e = std::ilogb(total);
  if (e != 0) rescale_row(b, i, -e);
}

namespace {

// Returns w expressed in the stored scale of row i, rebasing the row first if
// the addition would dwarf (or overflow) the stored values.
template <typename RebaseFn>
double stored_addition(double w, int& exponent, RebaseFn rebase) {
  const int need = std::ilogb(w) + exponent;
  if (need > kRebaseLimit) rebase(-need);
  return std::ldexp(w, exponent);
}

}  // namespace

void TransitionStack::expand() {
  const std::size_t n = n_;
  for (Block& b : blocks_) {
    Matrix grown(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) grown(i, j) = b.f(i, j);
    b.f = std::move(grown);
    b.f_o.resize(n + 1, 0.0);
    b.exponent.resize(n + 1, 0);

    for (std::size_t i = 0; i < n; ++i) {
      const double add = stored_addition(eps_bar_, b.exponent[i],
                                         [&](int shift) { rescale_row(b, i, shift); });
      b.f(i, n) += add;
      b.f_o[i] += add;
      normalize_row(b, i);
    }
    for (std::size_t j = 0; j <= n; ++j) b.f(n, j) = eps_bar_;
    b.f_o[n] = static_cast<double>(n + 1) * eps_bar_;
    normalize_row(b, n);
  }
  ++n_;
}

void TransitionStack::identify(int r, std::span<const double> prev, std::span<const double> cur) {
  check_action(r);
  if (prev.size() != n_ || cur.size() != n_)
    throw Error(Errc::dimension_mismatch, "estimates have length " + std::to_string(prev.size()) +
                                              "/" + std::to_string(cur.size()) + ", stack has " +
                                              std::to_string(n_) + " states");
  Block& b = blocks_[static_cast<std::size_t>(r - 1)];
  const double keep = 1.0 - phi_;
  const double cur_total = sum(cur);

  for (std::size_t i = 0; i < n_; ++i) {
    auto row = b.f.row(i);
    for (double& x : row) x *= keep;
    b.f_o[i] *= keep;

    const double w = phi_ * prev[i];
    if (w > 0.0) {
      const double add =
          stored_addition(w, b.exponent[i], [&](int shift) { rescale_row(b, i, shift); });
      for (std::size_t j = 0; j < n_; ++j) row[j] += add * cur[j];
      b.f_o[i] += add * cur_total;
    }
    normalize_row(b, i);
  }
}

Matrix TransitionStack::transition_matrix(int r) const {
  const Block& b = block(r);
  Matrix p(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const double total = b.f_o[i];
    for (std::size_t j = 0; j < n_; ++j)
      p(i, j) = total > 0.0 ? b.f(i, j) / total : 1.0 / static_cast<double>(n_);
  }
  return p;
}

Matrix TransitionStack::frequencies(int r) const {
  const Block& b = block(r);
  Matrix f(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) f(i, j) = std::ldexp(b.f(i, j), -b.exponent[i]);
  return f;
}

Vector TransitionStack::row_totals(int r) const {
  const Block& b = block(r);
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = std::ldexp(b.f_o[i], -b.exponent[i]);
  return out;
}

const TransitionStack::Block& TransitionStack::block(int r) const {
  check_action(r);
  return blocks_[static_cast<std::size_t>(r - 1)];
}

TransitionStack::Audit TransitionStack::audit() const {
  Audit a;
  for (int r = 1; r <= actions(); ++r) {
    const Block& b = blocks_[static_cast<std::size_t>(r - 1)];
    for (std::size_t i = 0; i < n_; ++i) {
      const double total = b.f_o[i];
      const double err = std::abs(total - sum(b.f.row(i))) / std::max(1.0, total);
      if (!(err <= a.worst)) {  // also catches NaN
        a.worst = std::isnan(err) ? INFINITY : err;
        a.action = r;
        a.row = i;
      }
    }
  }
  return a;
}

TransitionStack TransitionStack::from_blocks(double phi, double eps_bar, std::vector<Block> blocks) {
  TransitionStack s(static_cast<int>(blocks.size()), phi, eps_bar);
  const std::size_t n = blocks.front().f_o.size();
  for (const Block& b : blocks) {
    if (b.f.rows() != n || b.f.cols() != n || b.f_o.size() != n || b.exponent.size() != n)
      throw Error(Errc::snapshot_error, "transition blocks have inconsistent dimensions");
    for (double x : b.f.data())
      if (!(x >= 0.0) || !std::isfinite(x))
        throw Error(Errc::snapshot_error, "transition frequencies must be finite and non-negative");
    for (double x : b.f_o)
      if (!(x >= 0.0) || !std::isfinite(x))
        throw Error(Errc::snapshot_error, "row totals must be finite and non-negative");
  }
  s.blocks_ = std::move(blocks);
  s.n_ = n;
  return s;
}

}  // namespace efsm
