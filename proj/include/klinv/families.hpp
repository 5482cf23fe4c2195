#ifndef KLINV_FAMILIES_HPP
#define KLINV_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "klinv/kl.hpp"
#include "klinv/permutation.hpp"
#include "klinv/polynomial.hpp"

namespace klinv {

/*
  The four two-parameter families x_{k,m}, w_{k,m}, y_{k,m}, v_{k,m}.
  For k, m >= 1:

    X = [k,...,1, k+m,...,k+1]                       size k+m
    W = [k+m, k,...,2, k+m-1,...,k+1, 1]             size k+m
    Y = [k,...,1, k+2, k+1, k+m+2,...,k+3]           size k+m+2
    V = [k+2, k,...,2, k+m+2, 1, k+m+1,...,k+3, k+1] size k+m+2

  (x_{k,m}, w_{k,m}) and (y_{k,m}, v_{k,m}) are the two pair types whose
  ordinary and inverse KL polynomials have closed forms below.
*/
enum class FamilyKind { X, W, Y, V };
enum class FamilyPair { XW, YV };

struct FamilySpec {
  FamilyKind kind = FamilyKind::X;
  int k = 1;
  int m = 1;

  int permutation_size() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// "x:2,3", "w:2,3", "y:1,4", "v:1,4" (kind letter case-insensitive).
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// The literal one-line display for any k, m >= 0, without validation.
/// Used to examine the degenerate k = 0 / m = 0 readings.
std::vector<int> family_display(FamilyKind kind, int k, int m);

/// Throws std::invalid_argument unless k, m >= 1 and the size fits.
Permutation make_family(const FamilySpec& spec);

/// (bottom, top) of the pair type.
std::pair<Permutation, Permutation> make_family_pair(FamilyPair pair, int k, int m);

/// C(n, d) by Pascal's rule; 0 when d < 0 or d > n >= 0. Requires n >= 0.
std::int64_t binomial(int n, int d);

/// X/W: 1 + q + ... + q^{min(k-1,m-1)};  Y/V: 1 + q.
IntPolynomial closed_form_regular(FamilyPair pair, int k, int m);
/// X/W: sum_r C(k-1,r) C(m-1,r) q^r;  Y/V: 1 + (k+m-1) q.
IntPolynomial closed_form_inverse(FamilyPair pair, int k, int m);

/// C(k,a) C(m,b) [(-1)^{a+b+1} (1 + (k+m-a-b-1) q) + 2 (-1)^{a+b}]
IntPolynomial f_km(int k, int m, int a, int b);

struct IdentityCheck {
  IntPolynomial lhs;
  IntPolynomial rhs;
  bool equal = false;
};

/// sum_{a<k, b<m} (-1)^{a+b+1} C(k,a) C(m,b) sum_r C(k-a-1,r) C(m-b-1,r) q^r
///   against (-1)^{k+m+1} (1 + q + ... + q^{min(k-1,m-1)}).
IdentityCheck lemma_tech1_check(int k, int m);

/// sum_{a<k, b<m} f_km(a, b) against (-1)^{k+m} (1 + q). Both sides are
/// returned as evaluated; they differ when k = 1 or m = 1.
IdentityCheck lemma_tech2_check(int k, int m);

/*
  Rebuilds P_{w0 w, w0 x} from the inversion identity specialised to
  pairs where every P_{z,w} with x < z <= w is 1:

    (-1)^{l(x)+l(w)+1} P_{x,w} + sum_{x<z<w} (-1)^{l(z)+l(w)+1} P_{w0 z, w0 x}

  Throws PreconditionError when x is not below w or some P_{z,w} != 1.
*/
IntPolynomial eq31_reconstruct(const Permutation& x, const Permutation& w, KLCache& cache);

} // namespace klinv

#endif
