#pragma once

#include "artin/extension.hpp"

namespace artin {

// e_i(x_1^r, ..., x_n^r), the i-th elementary symmetric polynomial in the
// r-th powers, over the standard table x1..xn.
Polynomial elementary_r_symmetric(int r, int n, int i,
                                  const FieldDescriptor& f = FieldDescriptor::rationals());

// Coinvariant algebra of G(r,1,n): k[x1..xn]/(e_1(r,n),...,e_n(r,n)),
// a complete intersection of dimension r^n n!.
AlgebraSpec coinv_gr1n(int r, int n, const FieldDescriptor& f = FieldDescriptor::rationals());

// Relative coinvariants of G(r,1,n-1) in G(r,1,n): k[xn]/(xn^{nr}).
AlgebraSpec coinv_gr1n_relative(int r, int n,
                                const FieldDescriptor& f = FieldDescriptor::rationals());

// The chain triple A = k[xn]/(xn^{nr}), B = coinvariants of G(r,1,n-1),
// C = coinvariants of G(r,1,n), with iota(xn) = xn and pi killing xn.
ExtensionTriple gr1n_chain_triple(int r, int n,
                                  const FieldDescriptor& f = FieldDescriptor::rationals());

// The G(3,3,3) > G(3,3,2) example: A = k[b,c]/(b^3-c^6, bc) with weights
// b:2 c:1, B = k[x,y]/(x^3+y^3, xy), C = k[x,y,z]/(x^3+y^3+z^3,
// x^3y^3+x^3z^3+y^3z^3, xyz), iota: b -> xy, c -> z, pi: z -> 0.
ExtensionTriple g333_triple(const FieldDescriptor& f = FieldDescriptor::rationals());

}  // namespace artin
