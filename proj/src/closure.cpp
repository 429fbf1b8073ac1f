#include "braidcalc/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidcalc {

std::size_t LinkComponents::component_of(int position) const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int m : parts[i].members) {
      if (m == position) return i;
    }
  }
  throw std::out_of_range("position " + std::to_string(position) + " is not a strand");
}

namespace {

std::vector<int> initial_labels(int strands, const std::vector<ClosureComponent>& parts) {
  std::vector<int> label(static_cast<std::size_t>(strands), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int m : parts[i].members) label[static_cast<std::size_t>(m - 1)] = static_cast<int>(i);
  }
  return label;
}

}  // namespace

LinkComponents components(const BraidWord& w) {
  LinkComponents out;
  for (auto& cycle : underlying_permutation(w).cycles()) {
    ClosureComponent part;
    part.strands = static_cast<int>(cycle.size());
    std::sort(cycle.begin(), cycle.end());
    part.members = std::move(cycle);
    out.parts.push_back(std::move(part));
  }
  const std::size_t k = out.parts.size();
  out.mixed.assign(k, std::vector<int>(k, 0));

  // Sweep the word carrying the component label of whichever strand sits
  // at each axis position.
  std::vector<int> label = initial_labels(w.strands(), out.parts);
  for (const auto& l : w.letters()) {
    auto& left = label[static_cast<std::size_t>(l.index() - 1)];
    auto& right = label[static_cast<std::size_t>(l.index())];
    const int s = to_int(l.sign());
    if (left == right) {
      out.parts[static_cast<std::size_t>(left)].self_writhe += s;
    } else {
      out.mixed[static_cast<std::size_t>(left)][static_cast<std::size_t>(right)] += s;
      out.mixed[static_cast<std::size_t>(right)][static_cast<std::size_t>(left)] += s;
    }
    std::swap(left, right);
  }
  for (auto& part : out.parts) part.beta = part.self_writhe - part.strands;
  return out;
}

std::vector<std::vector<int>> position_labels(const BraidWord& w, const LinkComponents& c) {
  std::vector<std::vector<int>> rows;
  rows.reserve(w.length() + 1);
  std::vector<int> label = initial_labels(w.strands(), c.parts);
  rows.push_back(label);
  for (const auto& l : w.letters()) {
    std::swap(label[static_cast<std::size_t>(l.index() - 1)], label[static_cast<std::size_t>(l.index())]);
    rows.push_back(label);
  }
  return rows;
}

LinkingMatrix linking_matrix(const LinkComponents& c) {
  LinkingMatrix m;
  m.lk.assign(c.size(), std::vector<int>(c.size(), 0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      // Two distinct closed components cross an even number of times.
      if (c.mixed[i][j] % 2 != 0) throw std::logic_error("odd mixed crossing count");
      m.lk[i][j] = c.mixed[i][j] / 2;
    }
  }
  return m;
}

LinkingMatrix linking_matrix(const BraidWord& w) { return linking_matrix(components(w)); }

LaurentMatrix reduced_burau(const Letter& l, int strands) {
  const int dim = strands - 1;
  const int i = l.index() - 1;  // 0-based row of the generator
  LaurentMatrix m = LaurentMatrix::identity(dim);
  if (dim == 0) return m;
  const bool positive = l.sign() == Sign::Positive;
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  // sigma_i:   row i becomes (.., t, -t, 1, ..) around the diagonal
  // sigma_i^-1 row i becomes (.., 1, -t^-1, t^-1, ..)
  m(i, i) = positive ? -t : -tinv;
  if (i > 0) m(i, i - 1) = positive ? t : LaurentPoly(1);
  if (i < dim - 1) m(i, i + 1) = positive ? LaurentPoly(1) : tinv;
  return m;
}

LaurentMatrix reduced_burau(const BraidWord& w) {
  LaurentMatrix m = LaurentMatrix::identity(w.strands() - 1);
  for (const auto& l : w.letters()) m = m * reduced_burau(l, w.strands());
  return m;
}

LaurentPoly alexander_polynomial(const BraidWord& w) {
  const int n = w.strands();
  const LaurentMatrix b = reduced_burau(w);
  const LaurentPoly det = (LaurentMatrix::identity(n - 1) - b).determinant();
  // Delta(t) = (1 - t) / (1 - t^n) * det(I - B)
  const LaurentPoly one_minus_t(0, {1, -1});
  if (n == 1) return LaurentPoly(1);
  return exact_divide(det * one_minus_t, LaurentPoly(0, {1}) - LaurentPoly::monomial(1, n)).normalized();
}

}  // namespace braidcalc
