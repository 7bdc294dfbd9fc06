#include "jemo/elem_op.hpp"

#include <string>

namespace jemo {

ElemOp::ElemOp(int n, TermList t) : dim(n), terms(std::move(t)) {
  if (n < 1) throw DimMismatch("ElemOp: dimension must be >= 1");
  if (terms.empty()) throw EmptyTensor("ElemOp: at least one term required");
  for (const auto& [a, b] : terms) {
    if (a.dim() != n || b.dim() != n)
      throw DimMismatch("ElemOp: coefficient dimension mismatch");
  }
}

CMatrix apply(const ElemOp& op, const CMatrix& x) {
  if (x.dim() != op.dim)
    throw DimMismatch("apply: argument dimension " + std::to_string(x.dim()) +
                      " does not match operator dimension " +
                      std::to_string(op.dim));
  CMatrix r(op.dim);
  for (const auto& [a, b] : op.terms) r += a * x * b;
  return r;
}

ElemOp jordan_op(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "jordan_op");
  return ElemOp(a.dim(), TermList{{a, b}, {b, a}});
}

ElemOp amplify(const ElemOp& op, int k) {
  if (k < 1) throw DimMismatch("amplify: k must be >= 1");
  if (k == 1) return op;
  const CMatrix id = CMatrix::identity(k);
  TermList terms;
  terms.reserve(op.terms.size());
  for (const auto& [a, b] : op.terms) terms.emplace_back(kron(id, a), kron(id, b));
  return ElemOp(op.dim * k, std::move(terms));
}

ElemOp transposed(const ElemOp& op) {
  TermList terms;
  terms.reserve(op.terms.size());
  for (const auto& [a, b] : op.terms)
    terms.emplace_back(transpose(b), transpose(a));
  return ElemOp(op.dim, std::move(terms));
}

CMatrix tensor_matrix(const TermList& terms) {
  if (terms.empty()) throw EmptyTensor("tensor_matrix: empty term list");
  CMatrix t = kron(terms[0].first, terms[0].second);
  for (size_t i = 1; i < terms.size(); ++i)
    t += kron(terms[i].first, terms[i].second);
  return t;
}

std::vector<CVector> side_vectors(const TermList& terms, int side) {
  std::vector<CVector> cols;
  cols.reserve(terms.size());
  for (const auto& [a, b] : terms)
    cols.push_back(vec_rows(side == 0 ? a : b));
  return cols;
}

}  // namespace jemo
