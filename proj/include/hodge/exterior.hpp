#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace hodge {

// Basis label dx_{i1} ^ ... ^ dx_{ik} of Lambda^k(R^n*), axes 0-based and
// strictly increasing. Ordering is lexicographic on the axis tuple.
class FormIndex {
public:
  FormIndex() = default;
  FormIndex(int n, std::vector<int> axes);

  static FormIndex empty(int n) { return FormIndex(n, {}); }
  static FormIndex full(int n);
  static FormIndex axis(int n, int mu) { return FormIndex(n, {mu}); }

  int dim() const { return n_; }
  int degree() const { return static_cast<int>(axes_.size()); }
  const std::vector<int> &axes() const { return axes_; }
  bool contains(int mu) const;

  // Sorted complement of the axes in {0, ..., n-1}.
  FormIndex complement() const;

  std::string to_string() const;

  friend bool operator==(const FormIndex &, const FormIndex &) = default;
  friend std::strong_ordering operator<=>(const FormIndex &a,
                                          const FormIndex &b) {
    if (auto c = a.n_ <=> b.n_; c != 0)
      return c;
    return a.axes_ <=> b.axes_;
  }

private:
  int n_ = 0;
  std::vector<int> axes_;
};

// A basis element with a sign in {-1, 0, +1}; the index is absent iff the
// sign is zero.
struct SignedIndex {
  int sign = 0;
  std::optional<FormIndex> index;

  static SignedIndex zero() { return {}; }
  static SignedIndex of(int s, FormIndex idx) {
    if (s == 0)
      return {};
    return {s, std::move(idx)};
  }
  bool is_zero() const { return sign == 0; }
  friend bool operator==(const SignedIndex &, const SignedIndex &) = default;
};

// All FormIndex of degree k in dimension n, in lexicographic order.
std::vector<FormIndex> basis(int n, int k);

// Sign of the shuffle that sorts the concatenation a.axes ++ b.axes, or zero
// when an axis repeats. Throws std::invalid_argument on dimension mismatch.
SignedIndex wedge_basis(const FormIndex &a, const FormIndex &b);

// a ^ star(a) = dx_0 ^ ... ^ dx_{n-1}.
SignedIndex hodge_star_basis(const FormIndex &a);

// iota_mu removes mu with sign (-1)^{position of mu}.
SignedIndex interior_basis(int mu, const FormIndex &a);

// epsilon_mu a = dx_mu ^ a.
SignedIndex exterior_basis(int mu, const FormIndex &a);

// Composes two signed basis maps; zero is absorbing.
template <class F>
SignedIndex then(const SignedIndex &s, F &&f) {
  if (s.is_zero())
    return SignedIndex::zero();
  SignedIndex r = f(*s.index);
  if (r.is_zero())
    return r;
  r.sign *= s.sign;
  return r;
}

// Exponent e in iota_mu = (-1)^e * star . epsilon_mu . star on k-forms in
// dimension n. Brute force over n <= 5 fixes e = n*k + n (mod 2).
int interior_star_sign_exponent(int n, int k);

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace hodge
