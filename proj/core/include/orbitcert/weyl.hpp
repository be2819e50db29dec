#ifndef ORBITCERT_WEYL_HPP
#define ORBITCERT_WEYL_HPP

#include <vector>

#include "orbitcert/rational.hpp"

namespace orbitcert {

enum class Family { A, B, C, D, G2 };

Family family_from_string(const std::string& s);
const char* to_string(Family f);

/// Simple type in Dynkin's root ordering. For A, B, C, D this coincides with
/// the usual (Bourbaki) fundamental-weight numbering; for G2 the labels are
/// swapped relative to Bourbaki, so phi_2 is the 7-dimensional representation
/// and phi_1 the adjoint.
struct SimpleType {
  Family family = Family::A;
  long rank = 1;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Admissibility: A_n n>=1, B_n/C_n n>=2, D_n n>=3, G2 rank 2.
bool admissible(const SimpleType& t);

/// Dominant weight in fundamental-weight coordinates (Dynkin ordering).
struct HighestWeight {
  std::vector<long> coeffs;

  static HighestWeight fundamental(long rank, long index, long power = 1);
  static HighestWeight zero(long rank);
  HighestWeight operator+(const HighestWeight& o) const;
  HighestWeight scaled(long k) const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// Cartan matrix a_ij = <alpha_i, alpha_j^vee>.
std::vector<std::vector<long>> cartan_matrix(const SimpleType& t);

/// Positive roots in simple-root coordinates, generated by reflection closure.
std::vector<std::vector<long>> positive_roots(const SimpleType& t);

/// Product over positive roots of <lambda+rho, alpha> / <rho, alpha>, exact.
Int weyl_dim(const SimpleType& t, const HighestWeight& lambda);

/// Dimension of the group (adjoint dimension): #roots + rank.
Int group_dim(const SimpleType& t);
/// Closed-form group dimension, defined for degenerate low ranks too
/// (C_1 = A_1 = B_1 -> 3, D_2 -> 6); used by the factorization tables.
Int group_dim_closed(Family f, long rank);

/// Dimension of the degree-k span of highest-weight components of products:
/// sum over (k_1..k_r, a), sum k_i + a = k, of
///   (#monomials of degree a in `trivial_dims` variables) * weyl_dim(sum k_i lambda_i).
Int dim_cartan_power(const SimpleType& t, const std::vector<HighestWeight>& summands,
                     long trivial_dims, long k);

/// Multiplicity of the trivial summand in the same expansion (k_i all zero).
Int dim_cartan_power_trivial(long trivial_dims, long k);

}  // namespace orbitcert

#endif
