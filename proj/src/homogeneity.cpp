#include "hermicert/homogeneity.hpp"

namespace hermicert {

bihom_witness is_bihomogeneous(const hermitian_poly& r) {
  bihom_witness w;
  if (r.is_zero()) {
    w.verdict = true;
    w.degenerate = true;
    return w;
  }
  const int m = r.deg_z();
  for (const auto& [k, v] : r.terms())
    if (k.first.weight() != m || k.second.weight() != m) return w;
  w.verdict = true;
  w.m = m;
  return w;
}

hermitian_poly bihomogenize(const hermitian_poly& r) {
  if (r.is_zero()) throw malformed_input("bihomogenize: zero polynomial has no degree");
  const int m = r.deg_z();
  hermitian_poly out(r.vars() + 1);
  for (const auto& [k, v] : r.terms())
    out.add_term(k.first.extended(m - k.first.weight()),
                 k.second.extended(m - k.second.weight()), v);
  return out;
}

hermitian_poly dehomogenize(const hermitian_poly& r, std::size_t slot) {
  if (slot >= r.vars()) throw malformed_input("dehomogenize: slot out of range");
  hermitian_poly out(r.vars() - 1);
  for (const auto& [k, v] : r.terms())
    out.add_term(k.first.without_slot(slot), k.second.without_slot(slot), v);
  return out;
}

hermitian_poly reflect(const hermitian_poly& r) {
  if (r.vars() != 1)
    throw malformed_input("reflect: defined only in one variable");
  if (r.is_zero()) throw malformed_input("reflect: zero polynomial has no degree");
  const int m = r.deg_z();
  hermitian_poly out(1);
  for (const auto& [k, v] : r.terms())
    out.add_term(multi_index{m - k.first[0]}, multi_index{m - k.second[0]}, v);
  return out;
}

}  // namespace hermicert
