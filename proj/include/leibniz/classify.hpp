#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/sampler.hpp"
#include "leibniz/structure_table.hpp"

#include <map>
#include <string>
#include <vector>

namespace leibniz {

// Extensions of T(4) by one or two generators in the basis
// (N12, N23, N34, N13, N24, N14, X) or (..., N14, X1, X2).

/// Parameters of the one-generator family; the N34, N13, N24 diagonal
/// entries follow from a12_12 and a23_23 and [N14, X] = 0.
struct L41Params {
  Scalar a12_12, a12_24, b12_14;
  Scalar a23_23, a23_14, b23_14;
  Scalar a34_13, b34_14;
  Scalar s14;

  /// Names a1_12_12, a1_12_24, b1_12_14, a1_23_23, a1_23_14, b1_23_14,
  /// a1_34_13, b1_34_14, s11_14 in this order.
  static const std::vector<std::string>& names();
  /// Absent names are zero; unknown names throw InputError.
  static L41Params from_map(const std::map<std::string, Scalar>& values);
  std::map<std::string, Scalar> to_map() const;
  friend bool operator==(const L41Params&, const L41Params&) = default;
};

/// Throws InputError naming the violated restriction, or when
/// (a12_12, a23_23) = (0, 0).
ScalarTable build_L41(const L41Params& p);

/// Reads the parameters back from a 7-dimensional table; throws InputError
/// unless the table is exactly build_L41 of them.
L41Params read_L41(const ScalarTable& table);

/// True iff build_L41(p) is not a Lie algebra: some of b12_14,
/// a23_14 + b23_14, b34_14, s14 is nonzero.
bool is_non_lie(const L41Params& p);

/// Seeded valid non-Lie parameters, spread evenly over the four branches of
/// the case analysis (a12_12 = 0; a23_23/a12_12 = 0, -1, other).
L41Params sample_non_lie_L41(Rng& rng);

enum class FormId { L1, L2, L3, L42 };

const char* to_string(FormId id);
/// Throws InputError for anything but L1, L2, L3, L42.
FormId parse_form_id(const std::string& text);

/// Residual parameter names: L1 a1_12_24, b1_12_14, s11_14; L2 a1_23_14,
/// b1_23_14, s11_14; L3 a1_23_23; L42 s11_14, s12_14, s21_14, s22_14.
const std::vector<std::string>& form_parameter_names(FormId id);

struct CanonicalForm {
  FormId id = FormId::L1;
  std::map<std::string, Scalar> params;  // absent names are zero
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws InputError on an unknown parameter or a failed non-Lie condition:
/// L1 (b12_14, s14) != 0, L2 (a23_14 + b23_14, s14) != 0,
/// L3 a23_23 (1 + a23_23) != 0, L42 some s != 0.
ScalarTable build_canonical(const CanonicalForm& form);

struct Classification {
  CanonicalForm form;
  BasisChange witness;  // change_of_basis(build_L41(p), witness) == build_canonical(form)
  std::string route;    // which branch of the case analysis was taken
};

/// Normalizes a non-Lie member of the one-generator family to L1, L2 or L3.
/// Throws InputError for invalid parameters and for Lie members.
Classification classify_L41(const L41Params& p);

/// Mixes X1, X2 of an 8-dimensional two-generator table so that the
/// superdiagonal parts become (1, 0, *) and (0, 1, *). Throws InputError when
/// a1_12_12 a2_23_23 - a2_12_12 a1_23_23 = 0.
BasisChange l42_generator_change(const ScalarTable& table);

enum class Verdict { distinct, inconclusive };
const char* to_string(Verdict v);

/// Compares invariants only (dimension, series signature, Lie property,
/// right annihilator dimension); never claims an isomorphism.
Verdict distinguish(const ScalarTable& a, const ScalarTable& b);

}  // namespace leibniz
