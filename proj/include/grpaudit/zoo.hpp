#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "grpaudit/perm_group.hpp"

namespace grpaudit::zoo {

using Mat2 = std::array<std::uint32_t, 4>;  // row-major [[a, b], [c, d]] over F_p

PermGroup cyclic(std::size_t n);
/// C_p^k acting on k blocks of p points.
PermGroup elementary_abelian(std::size_t p, std::size_t k);
/// Dihedral group of order 2n on n points.
PermGroup dihedral(std::size_t n);
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);

/// x -> a x^s + b on F_q, with a ranging over the subgroup of order k of the
/// multiplicative group and s over the Frobenius powers when requested.
PermGroup affine_line(std::uint32_t q, std::uint32_t k, bool frobenius = false);
/// F_p^2 : H on p^2 points, H generated by the given matrices.
PermGroup affine_plane(std::uint32_t p, const std::vector<Mat2>& h);
/// Linear action of the matrices on the p^2 - 1 nonzero vectors.
PermGroup linear_on_vectors(std::uint32_t p, const std::vector<Mat2>& gens);
PermGroup gl2(std::uint32_t p);
PermGroup sl2(std::uint32_t p);
/// 3^{1+2} : H acting on the 27 elements of the extraspecial group of
/// exponent 3, H <= SL_2(3) generated by the given matrices.
PermGroup extraspecial_27(const std::vector<Mat2>& h);

/// Actions on the projective line over F_q (q prime or 4, 8, 9).
PermGroup psl2(std::uint32_t q);
PermGroup pgl2(std::uint32_t q);
/// PSL_2(q) extended by field automorphisms.
PermGroup psigmal2(std::uint32_t q);
/// PGL_2(q) extended by field automorphisms.
PermGroup pgammal2(std::uint32_t q);
/// PSL_2(9) extended by x -> w x^3 with w a non-square.
PermGroup m10();

PermGroup direct_product(const PermGroup& a, const PermGroup& b);
/// T wr C_t in its imprimitive action: t blocks, cycled by the top group.
PermGroup wreath_cyclic(const PermGroup& t, std::size_t copies);

/// Builds a named family member. Throws DomainError for unknown families,
/// out-of-range parameters, or an order differing from the closed form.
PermGroup make(const std::string& family, const nlohmann::json& params);
/// Closed-form order of a family member.
std::uint64_t family_order(const std::string& family, const nlohmann::json& params);

std::vector<Mat2> c4_in_sl2_3();
std::vector<Mat2> q8_in_sl2_3();
/// [[1, 1], [0, 1]] and [[1, 0], [1, 1]], generating SL_2(p) for every prime p.
std::vector<Mat2> sl2_generators();

}  // namespace grpaudit::zoo
