#include "hhbv/homology.hpp"

#include "hhbv/errors.hpp"
#include "hhbv/modp.hpp"

#include <sstream>

namespace hhbv {
namespace {

HomologyGroup integral_homology(const IntMatrix& d_in, const IntMatrix& d_out, const Ring& ring) {
  const std::size_t n = d_out.cols();
  HomologyGroup h{ring, n, 0, {}, {}, {}, IntMatrix(0, n), d_in, d_out};

  SNFResult out = smith_normal_form(d_out);
  const std::size_t r = out.rank();
  const IntMatrix kernel = out.V.col_block(r, n);
  const IntMatrix kernel_coords = out.V_inv.row_block(r, n);
  const std::size_t m = n - r;

  SNFResult img = smith_normal_form(kernel_coords * d_in);
  const IntMatrix basis = kernel * img.U_inv;
  const IntMatrix coords = img.U * kernel_coords;

  std::vector<Vector> proj_rows;
  for (std::size_t j = 0; j < m; ++j) {
    Integer order = j < img.rank() ? img.invariant_factors[j] : Integer(0);
    if (order == 1) continue;
    if (order != 0 && ring.kind == Ring::Kind::Rationals) continue;
    if (order == 0)
      ++h.free_rank;
    else
      h.torsion.push_back(order);
    h.orders.push_back(order);
    h.representatives.push_back(basis.column(j));
    proj_rows.push_back(coords.row(j));
  }
  h.projection = IntMatrix::from_columns(proj_rows, n).transposed();
  return h;
}

HomologyGroup field_homology(const IntMatrix& d_in, const IntMatrix& d_out, const Ring& ring) {
  const long long p = ring.p;
  const std::size_t n = d_out.cols();
  HomologyGroup h{ring, n, 0, {}, {}, {}, IntMatrix(0, n), d_in.reduced(ring), d_out.reduced(ring)};

  modp::SpanBuilder span(n, p);
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < d_in.cols(); ++c) {
    Vector col = h.d_in.column(c);
    if (span.add(col)) columns.push_back(std::move(col));
  }
  const std::size_t boundary_dim = columns.size();
  for (auto& z : modp::nullspace(h.d_out, p)) {
    if (span.add(z)) {
      h.representatives.push_back(z);
      h.orders.push_back(0);
      columns.push_back(std::move(z));
    }
  }
  h.free_rank = h.representatives.size();
  for (std::size_t i = 0; i < n && columns.size() < n; ++i) {
    Vector e(n);
    e[i] = 1;
    if (span.add(e)) columns.push_back(std::move(e));
  }
  auto inv = modp::inverse(IntMatrix::from_columns(columns, n), p);
  h.projection = inv->row_block(boundary_dim, boundary_dim + h.free_rank);
  return h;
}

}  // namespace

bool HomologyGroup::is_cycle(const Vector& v) const {
  Vector image = d_out * v;
  for (auto& x : image) x = ring.normalize(x);
  return is_zero_vector(image);
}

Vector HomologyGroup::coordinates(const Vector& cycle) const {
  Vector c = projection * cycle;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring.is_prime_field() ? ring.normalize(c[i]) : reduce_by_order(c[i], orders[i]);
  return c;
}

bool HomologyGroup::is_boundary(const Vector& v) const { return is_cycle(v) && is_zero_vector(coordinates(v)); }

HomologyGroup homology(const IntMatrix& d_in, const IntMatrix& d_out, const Ring& ring) {
  if (d_in.rows() != d_out.cols()) {
    std::ostringstream msg;
    msg << "homology: incoming map has " << d_in.rows() << " rows but outgoing map has " << d_out.cols() << " columns";
    throw std::invalid_argument(msg.str());
  }
  if (!(d_out * d_in).reduced(ring).is_zero()) throw CompositionNonZero("homology: d_out * d_in != 0");
  return ring.is_prime_field() ? field_homology(d_in, d_out, ring) : integral_homology(d_in, d_out, ring);
}

IntMatrix induced_map_on_homology(const IntMatrix& op, const HomologyGroup& source, const HomologyGroup& target) {
  if (op.cols() != source.ambient_dim || op.rows() != target.ambient_dim)
    throw std::invalid_argument("induced_map_on_homology: operator shape does not match the groups");
  IntMatrix out(target.generators(), source.generators());
  for (std::size_t j = 0; j < source.generators(); ++j) {
    Vector image = op * source.representatives[j];
    if (!target.is_cycle(image))
      throw NotAChainMap("operator sends generator " + std::to_string(j) + " to a non-cycle");
    Vector c = target.coordinates(image);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  for (std::size_t j = 0; j < source.d_in.cols(); ++j) {
    if (!target.is_boundary(op * source.d_in.column(j)))
      throw NotAChainMap("operator sends a boundary to a nonzero class");
  }
  return out;
}

AbelianGroup cokernel_on_homology(const IntMatrix& induced, const HomologyGroup& target) {
  if (target.ring.is_prime_field()) {
    AbelianGroup g;
    g.free_rank = target.generators() - modp::rank(induced, target.ring.p);
    return g;
  }
  std::size_t torsion_gens = 0;
  for (const auto& o : target.orders) torsion_gens += (o != 0);
  IntMatrix presentation(target.generators(), induced.cols() + torsion_gens);
  std::size_t extra = induced.cols();
  for (std::size_t i = 0; i < target.generators(); ++i) {
    for (std::size_t j = 0; j < induced.cols(); ++j) presentation(i, j) = induced(i, j);
    if (target.orders[i] != 0) presentation(i, extra++) = target.orders[i];
  }
  return cokernel_of(presentation);
}

}  // namespace hhbv
