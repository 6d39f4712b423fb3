#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/poly.hpp"
#include "leibniz/sampler.hpp"
#include "leibniz/structure_table.hpp"
#include "leibniz/triangular.hpp"

#include <map>
#include <string>
#include <vector>

namespace leibniz {

// Solvable extensions of T(n) by generators X^1..X^f. The basis is T(n) in
// PairIndex order followed by X1..Xf. Parameter names:
//   a{alpha}_{ij}_{pq}  coefficient of N_pq in [N_ij, X^alpha]
//   b{alpha}_{ij}_{pq}  coefficient of N_pq in [X^alpha, N_ij]
//   s{alpha}{beta}_{pq} coefficient of N_pq in [X^alpha, X^beta]
// with {ij} the PairIndex token ("12", or "1_12" once n >= 10).

std::string a_name(const PairIndex& idx, int alpha, std::pair<int, int> row, std::pair<int, int> col);
std::string b_name(const PairIndex& idx, int alpha, std::pair<int, int> row, std::pair<int, int> col);
std::string s_name(const PairIndex& idx, int alpha, int beta, std::pair<int, int> col);

/// Generator indices a parameter name refers to (one for a/b, two for s).
std::vector<int> generators_of(const std::string& name);

/// Largest n accepted by the symbolic routines.
inline constexpr int kMaxSymbolicN = 8;
/// Largest n accepted by the concrete routines.
inline constexpr int kMaxConcreteN = 11;

/// Extension with [N,N] = T(n), the right action of each X^alpha restricted
/// to the upper triangular pattern (free superdiagonal, summed diagonal,
/// off-diagonals a_{12,2n}, a_{i(i+1),1n}, a_{(n-1)n,1(n-1)}), and fully
/// generic left actions and [X,X] products. Throws std::invalid_argument
/// outside 3 <= n <= kMaxSymbolicN, 1 <= f <= n-1.
PolyTable generic_extension(int n, int f);

/// Sum of the superdiagonal right-action parameters of X^alpha; the
/// eigenvalue of R_{X^alpha} on N_1n.
Poly diagonal_sum(const PairIndex& idx, int alpha);

enum class RelationKind {
  left_action,         // b = -a off the free (1,n) column
  generator_products,  // [X^alpha, X^beta] supported on N_1n only
};

struct LinearRelation {
  RelationKind kind;
  Poly form;  // relation is form = 0
};

/// The relations the extension table is expected to satisfy: every entry of
/// the left action equals minus the right action, except the (1,n) column of
/// superdiagonal rows, and [X^alpha, X^beta] has no component off N_1n.
std::vector<LinearRelation> stated_linear_relations(int n, int f);

/// Per-generator quadratic restrictions:
/// a_{i(i+1),i(i+1)} (a_{i(i+1),1n} + b_{i(i+1),1n}) for 2 <= i <= n-2,
/// a_{12,12} b_{12,1n}, and a_{(n-1)n,(n-1)n} b_{(n-1)n,1n}.
struct Restriction {
  std::string text;  // product in readable form
  Poly left;
  Poly right;
  Poly product() const { return left * right; }
};
std::vector<Restriction> stated_restrictions(int n, int f);

/// Solves each relation for its leading b or s indeterminate.
std::map<std::string, Poly> solve_relations(const std::vector<Poly>& relations);

PolyTable substitute_table(const PolyTable& table, const std::map<std::string, Poly>& values);
ScalarTable evaluate_table(const PolyTable& table, const std::map<std::string, Scalar>& values);

/// Every residue coordinate of a table as a polynomial, in triple order.
std::vector<Poly> residue_polynomials(const PolyTable& table, Execution exec = Execution::parallel);

struct ResidueReport {
  int n = 0;
  int f = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> labels;
  std::vector<Residue<Poly>> residues;  // nonzero residues of the generic table, triple order

  // Linear part.
  std::vector<Poly> linear_relations;  // RREF basis of the extracted relations
  std::vector<Poly> missing_left_action;
  std::vector<Poly> missing_generator_products;
  std::vector<Poly> unexplained_linear;  // extracted but not implied by the stated set

  // After substituting the stated linear relations.
  std::vector<Poly> quadratic_residuals;
  std::vector<Poly> restriction_residuals;     // in the span of the stated products
  std::vector<Poly> eigenvalue_residuals;      // need diagonal_sum * symmetric part
  std::vector<Poly> cross_generator_residuals; // mix parameters of different generators
  std::vector<Poly> unexplained_quadratic;

  // Specialization diagonal_sum(alpha) = 0 for every alpha.
  std::vector<Poly> specialized_residuals;
  std::vector<Poly> specialized_unexplained;
  std::size_t sample_points = 0;
  std::size_t sample_failures = 0;

  bool left_action_verified() const { return missing_left_action.empty() && unexplained_linear.empty(); }
  bool generator_products_verified() const {
    return missing_generator_products.empty() && unexplained_linear.empty();
  }
  bool linear_verified() const { return left_action_verified() && generator_products_verified(); }
  bool restrictions_verified() const {
    return unexplained_quadratic.empty() && specialized_unexplained.empty() && sample_failures == 0;
  }
};

/// Computes the symbolic Leibniz residues of generic_extension(n, f), extracts
/// the relations that are linear in the parameters, compares them with
/// stated_linear_relations, substitutes, and sorts the remaining quadratic
/// residuals. Membership in the span of the stated products is decided
/// exactly and cross-checked by evaluation at sample_points seeded points of
/// the restriction variety. Requires 3 <= n <= 6.
ResidueReport derive_relations(int n, int f, std::uint64_t seed = 0, std::size_t sample_points = 500);

/// Concrete parameter assignment; absent parameters are zero.
struct ExtensionSpec {
  int n = 0;
  int f = 0;
  std::map<std::string, Scalar> params;
};

/// Free parameters of the extension table once the stated linear relations
/// hold, in a fixed order.
std::vector<std::string> master_parameter_names(int n, int f);

/// Symbolic form of the extension table after the stated linear relations.
/// Concrete mode accepts 3 <= n <= kMaxConcreteN.
PolyTable master_table(int n, int f);

/// Builds the concrete extension. Throws InputError naming the violated
/// product for a restriction violation, naming the product for a failed
/// eigenvalue condition diagonal_sum * symmetric part, and naming the
/// offending triple when any other Leibniz constraint fails.
ScalarTable master_extension(const ExtensionSpec& spec);

enum class ExtensionFamily { any, lie, non_lie };

struct ExtensionSampleOptions {
  ExtensionFamily family = ExtensionFamily::any;
  std::size_t max_attempts = 200;
};

/// Seeded random valid concrete extensions: Leibniz, superdiagonal vectors of
/// rank f (so some diagonal entry is nonzero). The non_lie family imposes
/// diagonal_sum = 0 for every generator and needs f <= n-2.
class ExtensionSampler {
 public:
  ExtensionSampler(int n, int f, ExtensionSampleOptions options = {});

  /// Throws std::runtime_error when max_attempts draws all fail.
  ExtensionSpec sample(Rng& rng) const;

 private:
  int n_;
  int f_;
  ExtensionSampleOptions options_;
  PolyTable table_;
  LinearClosure closure_;
  std::vector<std::string> variables_;
  std::vector<std::string> priority_;
};

ExtensionSpec sample_extension(int n, int f, Rng& rng, const ExtensionSampleOptions& options = {});

/// For a non-Lie table both [X^gamma, N_1n] and [N_1n, X^gamma] vanish for every
/// gamma; Lie tables pass trivially.
bool verify_eq_3(const ScalarTable& table, int n, int f);

/// Structure matrices of every generator, alpha = 1..f.
std::vector<StructureMatrices> all_structure_matrices(const ScalarTable& ext, int n, int f);

struct MaximalExtensionReport {
  int n = 0;
  bool normalization_corrupted = false;
  bool symbolic_forced_lie = false;
  std::vector<std::string> surviving_symmetric_parts;
  std::size_t samples = 0;
  std::size_t lie_samples = 0;
  std::size_t rejected_attempts = 0;
  bool passed() const { return symbolic_forced_lie && samples > 0 && lie_samples == samples; }
};

/// Extension by n-1 generators with X^1 normalized to
/// [N12,X1] = N12 + a N2n, [N_i(i+1),X1] = a N1n, [N(n-1)n,X1] = a N1(n-1),
/// [N_1j,X1] = N_1j: solves every linear consequence of the Leibniz identity
/// symbolically, checks that all symmetric parts vanish, and samples points of
/// the remaining constraint set (with nil-independent generators) to confirm
/// skew-symmetry. With corrupt_normalization the X1 superdiagonal sums to
/// zero instead, so [N_1n, X1] = 0. Requires 4 <= n <= 5.
MaximalExtensionReport verify_maximal_extension(int n, std::uint64_t seed = 0, std::size_t samples = 100,
                                                bool corrupt_normalization = false);

inline bool verify_theorem_3_4(int n, std::uint64_t seed = 0) {
  return verify_maximal_extension(n, seed).passed();
}

/// Nonzero off-diagonal entries of a structure matrix.
std::size_t off_diagonal_count(const Matrix& m);

}  // namespace leibniz
