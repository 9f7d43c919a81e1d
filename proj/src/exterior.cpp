#include "hodge/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hodge {

FormIndex::FormIndex(int n, std::vector<int> axes) : n_(n), axes_(std::move(axes)) {
  if (n < 0)
    throw std::invalid_argument("FormIndex: negative dimension");
  if (static_cast<int>(axes_.size()) > n)
    throw std::invalid_argument("FormIndex: degree exceeds dimension");
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (axes_[i] < 0 || axes_[i] >= n)
      throw std::invalid_argument("FormIndex: axis out of range");
    if (i > 0 && axes_[i - 1] >= axes_[i])
      throw std::invalid_argument("FormIndex: axes must be strictly increasing");
  }
}

FormIndex FormIndex::full(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i)
    all[i] = i;
  return FormIndex(n, std::move(all));
}

bool FormIndex::contains(int mu) const {
  return std::binary_search(axes_.begin(), axes_.end(), mu);
}

FormIndex FormIndex::complement() const {
  std::vector<int> rest;
  rest.reserve(n_ - axes_.size());
  for (int i = 0; i < n_; ++i)
    if (!contains(i))
      rest.push_back(i);
  return FormIndex(n_, std::move(rest));
}

std::string FormIndex::to_string() const {
  if (axes_.empty())
    return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (i)
      os << "^";
    os << "dx" << axes_[i] + 1;
  }
  return os.str();
}

namespace {

void combinations(int n, int k, int start, std::vector<int> &cur,
                  std::vector<FormIndex> &out) {
  if (static_cast<int>(cur.size()) == k) {
    out.emplace_back(n, cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<FormIndex> basis(int n, int k) {
  std::vector<FormIndex> out;
  if (k < 0 || k > n)
    return out;
  std::vector<int> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

SignedIndex wedge_basis(const FormIndex &a, const FormIndex &b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("wedge_basis: dimension mismatch");
  const auto &x = a.axes();
  const auto &y = b.axes();
  // Merge, counting how many elements of b jump over each element of a.
  std::vector<int> merged;
  merged.reserve(x.size() + y.size());
  long inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i] < y[j])) {
      merged.push_back(x[i++]);
    } else if (i == x.size() || y[j] < x[i]) {
      inversions += static_cast<long>(x.size() - i);
      merged.push_back(y[j++]);
    } else {
      return SignedIndex::zero();
    }
  }
  return SignedIndex::of(parity_sign(inversions), FormIndex(a.dim(), std::move(merged)));
}

SignedIndex hodge_star_basis(const FormIndex &a) {
  FormIndex c = a.complement();
  SignedIndex vol = wedge_basis(a, c);
  return SignedIndex::of(vol.sign, std::move(c));
}

SignedIndex interior_basis(int mu, const FormIndex &a) {
  if (mu < 0 || mu >= a.dim())
    throw std::invalid_argument("interior_basis: axis out of range");
  const auto &ax = a.axes();
  auto it = std::lower_bound(ax.begin(), ax.end(), mu);
  if (it == ax.end() || *it != mu)
    return SignedIndex::zero();
  long pos = it - ax.begin();
  std::vector<int> rest(ax.begin(), it);
  rest.insert(rest.end(), it + 1, ax.end());
  return SignedIndex::of(parity_sign(pos), FormIndex(a.dim(), std::move(rest)));
}

SignedIndex exterior_basis(int mu, const FormIndex &a) {
  if (mu < 0 || mu >= a.dim())
    throw std::invalid_argument("exterior_basis: axis out of range");
  return wedge_basis(FormIndex::axis(a.dim(), mu), a);
}

int interior_star_sign_exponent(int n, int k) { return (n * k + n) % 2; }

} // namespace hodge
