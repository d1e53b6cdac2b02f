#include "bigraded/decompose.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bigraded {

namespace {

// Columns of the identity completing span(m) to the full space of dimension n.
ExactMatrix complement_columns(const ExactMatrix& m, Index n) {
  RrefResult r = rref(hcat(m, exact_identity(n)));
  ExactMatrix out = exact_zero(n, 0);
  std::vector<Index> picked;
  for (Index p : r.pivots)
    if (p >= m.cols()) picked.push_back(p - m.cols());
  ExactMatrix e = exact_zero(n, static_cast<Index>(picked.size()));
  for (Index j = 0; j < e.cols(); ++j) e(picked[j], j) = GaussianRational(1);
  return e;
}

struct ExtractedColumns {
  // Original-coordinate column vectors of every finished part, per bidegree.
  std::map<BiDegree, std::vector<ExactVector>> by_degree;
};

// ---------------------------------------------------------------------------
// Phase 1: split off squares while del dbar is nonzero.

struct Phase1Result {
  Bicomplex minimal;                         // active complex, del dbar == 0
  std::map<BiDegree, ExactMatrix> embed;     // active coords -> original coords
  std::vector<DecompositionCertificate::Part> square_parts;
  std::map<BiDegree, std::vector<ExactVector>> square_cols;
};

Phase1Result phase1(const Bicomplex& input) {
  Phase1Result res;
  res.minimal = input;
  for (BiDegree d : input.bidegrees()) res.embed[d] = exact_identity(input.dim(d));

  for (;;) {
    const Bicomplex& a = res.minimal;
    BiDegree found{};
    ExactMatrix c;
    bool any = false;
    for (BiDegree d : a.bidegrees()) {
      ExactMatrix dd = a.deldbar(d);
      if (!is_zero_matrix(dd)) {
        found = d;
        c = std::move(dd);
        any = true;
        break;
      }
    }
    if (!any) break;

    // First nonzero pivot in column order.
    Index pr = -1, pc = -1;
    for (Index col = 0; col < c.cols() && pc < 0; ++col)
      for (Index row = 0; row < c.rows(); ++row)
        if (!c(row, col).is_zero()) {
          pr = row;
          pc = col;
          break;
        }

    BiDegree d = found;
    BiDegree dr = d + BiDegree{1, 0}, du = d + BiDegree{0, 1}, dt = d + BiDegree{1, 1};
    // phi = coordinate functional of the pivot row, normalized on y = deldbar x.
    GaussianRational inv = inverse(c(pr, pc));
    ExactMatrix phi = exact_zero(1, a.dim(dt));
    phi(0, pr) = inv;

    ExactVector x = ExactVector::Zero(a.dim(d));
    x(pc) = GaussianRational(1);
    ExactVector v = a.del(d) * x;   // del x at dr
    ExactVector u = a.dbar(d) * x;  // dbar x at du
    ExactVector y = c * x;          // deldbar x at dt

    // Split projections onto the square, commuting with both differentials.
    std::map<BiDegree, ExactMatrix> proj;
    proj[d] = x * (phi * c);
    proj[du] = u * (phi * a.del(du));
    proj[dr] = ExactMatrix(-(v * (phi * a.dbar(dr))));
    proj[dt] = y * phi;

    // Record the square in original coordinates.
    DecompositionCertificate::Part part;
    part.spec = IndecompSpec::square(d);
    res.square_parts.push_back(part);
    res.square_cols[d].push_back(res.embed.at(d) * x);
    res.square_cols[dr].push_back(res.embed.at(dr) * v);
    res.square_cols[du].push_back(res.embed.at(du) * u);
    res.square_cols[dt].push_back(res.embed.at(dt) * y);

    // Pass to the complement subcomplex ker(proj).
    std::map<BiDegree, ExactMatrix> kernels;
    for (const auto& [deg, p] : proj) kernels[deg] = kernel_basis(p);

    Bicomplex next;
    for (BiDegree deg : a.bidegrees()) {
      Index n = kernels.count(deg) ? kernels.at(deg).cols() : a.dim(deg);
      next.set_space(deg, n);
    }
    auto kernel_of = [&](BiDegree deg) -> ExactMatrix {
      auto it = kernels.find(deg);
      if (it != kernels.end()) return it->second;
      return exact_identity(a.dim(deg));
    };
    for (BiDegree deg : a.bidegrees()) {
      if (next.dim(deg) == 0) continue;
      for (BiDegree step : {BiDegree{1, 0}, BiDegree{0, 1}}) {
        BiDegree td = deg + step;
        if (next.dim(td) == 0) continue;
        ExactMatrix full = step == BiDegree{1, 0} ? a.del(deg) : a.dbar(deg);
        auto restricted = solve(kernel_of(td), ExactMatrix(full * kernel_of(deg)));
        if (!restricted)
          throw std::logic_error("decompose: square complement is not a subcomplex");
        if (step == BiDegree{1, 0})
          next.set_del(deg, *restricted);
        else
          next.set_dbar(deg, *restricted);
      }
    }
    for (BiDegree deg : a.bidegrees()) {
      if (next.dim(deg) == 0) {
        res.embed.erase(deg);
        continue;
      }
      res.embed[deg] = ExactMatrix(res.embed.at(deg) * kernel_of(deg));
    }
    res.minimal = std::move(next);
  }
  if (validation_enabled()) res.minimal.assert_valid("decompose phase 1 residue");
  return res;
}

// ---------------------------------------------------------------------------
// Phase 2: zigzag decomposition of a minimal bicomplex, one total-degree pair
// at a time, via the alternating A_n path quiver.

struct PairSpace {
  BiDegree deg;
  bool is_sink = false;
  std::vector<ExactVector> cols;  // active-complex coordinates at deg
  std::vector<int> thread;        // thread id per column, -1 for none
  std::vector<int> type_a;        // sinks: path position of the thread's left end
};

struct Thread {
  std::vector<std::pair<int, Index>> points;  // (path index, column)
  bool closed = false;
};

struct PairSweep {
  const Bicomplex* a = nullptr;
  std::vector<PairSpace> path;
  std::vector<Thread> threads;

  // rho order of sink types: threads with source-ended left endpoints come
  // first (shorter first), then sink-ended ones (longer first, bare last).
  // add(col of type t1 into col of type t2) is allowed iff rho(t1) <= rho(t2).
  static std::pair<int, int> rho(int left_pos) {
    bool source_ended = left_pos % 2 == 1;  // odd path positions are sources
    return source_ended ? std::pair<int, int>{0, -left_pos}
                        : std::pair<int, int>{1, left_pos};
  }

  // col_b += lambda * col_a within space s, cascading along both threads.
  void add_into(int s, Index b, Index lam_a, const GaussianRational& lambda) {
    PairSpace& sp = path[s];
    sp.cols[b] += lambda * sp.cols[lam_a];
    int ta = sp.thread[lam_a], tb = sp.thread[b];
    if (ta < 0 || tb < 0) return;
    // Shared positions: walk both threads; both end at this sink.
    std::map<int, Index> pos_a;
    for (auto [pi, col] : threads[ta].points) pos_a[pi] = col;
    for (auto [pi, col] : threads[tb].points) {
      if (pi == s) continue;  // already updated
      auto it = pos_a.find(pi);
      if (it == pos_a.end()) continue;
      path[pi].cols[col] += lambda * path[pi].cols[it->second];
    }
  }

  // Scale a column and its whole thread.
  void scale_thread(int s, Index col, const GaussianRational& lambda) {
    int t = path[s].thread[col];
    if (t < 0) {
      path[s].cols[col] *= lambda;
      return;
    }
    for (auto [pi, c] : threads[t].points) path[pi].cols[c] *= lambda;
  }
};

// Coordinates of vec in the span of cols (must be solvable).
ExactVector coords_in(const std::vector<ExactVector>& cols, const ExactVector& vec,
                      Index ambient) {
  ExactMatrix m(ambient, static_cast<Index>(cols.size()));
  for (Index j = 0; j < m.cols(); ++j) m.col(j) = cols[j];
  auto x = solve(m, vec);
  if (!x) throw std::logic_error("decompose: vector escapes its block span");
  return *x;
}

void run_pair(PairSweep& sw, std::vector<DecompositionCertificate::Part>& parts_out,
              std::map<BiDegree, std::vector<ExactVector>>& cols_out,
              const std::map<BiDegree, ExactMatrix>& embed) {
  const Bicomplex& a = *sw.a;
  auto& path = sw.path;

  auto close_thread = [&](int tid) {
    if (tid < 0) return;
    Thread& t = sw.threads[tid];
    if (t.closed) return;
    t.closed = true;
    if (t.points.size() < 2)
      throw std::logic_error("decompose: single-point thread (coverage violation)");
    std::vector<BiDegree> verts;
    std::vector<std::pair<BiDegree, BiDegree>> edges;
    std::sort(t.points.begin(), t.points.end());
    for (size_t i = 0; i < t.points.size(); ++i) {
      verts.push_back(path[t.points[i].first].deg);
      if (i + 1 < t.points.size()) {
        BiDegree x = path[t.points[i].first].deg;
        BiDegree y = path[t.points[i + 1].first].deg;
        if (x.total() < y.total())
          edges.push_back({x, y});
        else
          edges.push_back({y, x});
      }
    }
    DecompositionCertificate::Part part;
    part.spec = IndecompSpec::zigzag(verts, edges);
    parts_out.push_back(part);
    for (auto [pi, col] : t.points) {
      BiDegree deg = path[pi].deg;
      cols_out[deg].push_back(embed.at(deg) * path[pi].cols[col]);
    }
  };

  // Process sources left to right (path positions 1, 3, 5, ...).
  for (size_t ui = 1; ui < path.size(); ui += 2) {
    PairSpace& u = path[ui];
    PairSpace& vl = path[ui - 1];
    PairSpace& vr = path[ui + 1];
    Index nu = static_cast<Index>(u.cols.size());
    Index nl = static_cast<Index>(vl.cols.size());
    Index nr = static_cast<Index>(vr.cols.size());

    // Current matrices of del into vl and dbar into vr, in the running bases.
    auto matrix_to = [&](const PairSpace& v, bool use_del) {
      ExactMatrix m = exact_zero(static_cast<Index>(v.cols.size()), nu);
      if (m.rows() == 0 || nu == 0) return m;
      for (Index c = 0; c < nu; ++c) {
        ExactVector img = use_del ? ExactVector(a.del(u.deg) * u.cols[c])
                                  : ExactVector(a.dbar(u.deg) * u.cols[c]);
        m.col(c) = coords_in(v.cols, img, a.dim(v.deg));
      }
      return m;
    };
    bool left_is_del = vl.deg - u.deg == BiDegree{1, 0};
    ExactMatrix l = matrix_to(vl, left_is_del);
    ExactMatrix r = matrix_to(vr, !left_is_del);

    std::vector<Index> l_match_row(nu, -1);
    std::vector<Index> row_match_col(nl, -1);

    // --- Normalize L: row groups by rho descending, free column ops.
    {
      std::vector<Index> rows(nl);
      for (Index i = 0; i < nl; ++i) rows[i] = i;
      std::stable_sort(rows.begin(), rows.end(), [&](Index x, Index y) {
        return PairSweep::rho(vl.type_a[x]) > PairSweep::rho(vl.type_a[y]);
      });
      std::vector<bool> col_used(nu, false);
      std::vector<bool> row_used(nl, false);
      for (size_t gi = 0; gi < rows.size();) {
        size_t gj = gi;
        while (gj < rows.size() &&
               PairSweep::rho(vl.type_a[rows[gj]]) == PairSweep::rho(vl.type_a[rows[gi]]))
          ++gj;
        // Pivot search inside the group.
        for (size_t k = gi; k < gj; ++k) {
          Index w = rows[k];
          if (row_used[w]) continue;
          Index pc = -1;
          for (Index c = 0; c < nu && pc < 0; ++c)
            if (!col_used[c] && !l(w, c).is_zero()) pc = c;
          if (pc < 0) continue;
          // Scale the pivot column (free op on U).
          GaussianRational inv = inverse(l(w, pc));
          if (inv != GaussianRational(1)) {
            u.cols[pc] *= inv;
            l.col(pc) *= inv;
            r.col(pc) *= inv;
          }
          // Clear the pivot row on all other unused columns (free U ops).
          for (Index c = 0; c < nu; ++c) {
            if (c == pc || col_used[c] || l(w, c).is_zero()) continue;
            GaussianRational f = l(w, c);
            u.cols[c] -= f * u.cols[pc];
            l.col(c) -= f * l.col(pc);
            r.col(c) -= f * r.col(pc);
          }
          // Clear the pivot column on all rows of smaller-or-equal rho.
          for (Index w2 = 0; w2 < nl; ++w2) {
            if (w2 == w || l(w2, pc).is_zero()) continue;
            if (PairSweep::rho(vl.type_a[w2]) > PairSweep::rho(vl.type_a[w]))
              throw std::logic_error("decompose: disallowed row elimination");
            GaussianRational f = l(w2, pc);
            // Basis change new_w = w + f*w2 with thread cascade; l rows update.
            sw.add_into(static_cast<int>(ui - 1), w, w2, f);
            l.row(w2) -= f * l.row(w);
          }
          col_used[pc] = true;
          row_used[w] = true;
          l_match_row[pc] = w;
          row_match_col[w] = pc;
        }
        gi = gj;
      }
    }

    // --- Normalize R: column groups (l-free first, then by rho of the
    // matched row's type, ascending), free row ops on vr.
    {
      std::vector<Index> cols(nu);
      for (Index i = 0; i < nu; ++i) cols[i] = i;
      auto col_key = [&](Index c) -> std::pair<int, std::pair<int, int>> {
        if (l_match_row[c] < 0) return {0, {0, 0}};
        return {1, PairSweep::rho(vl.type_a[l_match_row[c]])};
      };
      std::stable_sort(cols.begin(), cols.end(),
                       [&](Index x, Index y) { return col_key(x) < col_key(y); });
      std::vector<bool> row_used(nr, false);
      std::vector<Index> pivot_row_of(nu, -1);
      std::vector<Index> processed;  // pivoted columns in order
      for (Index ci = 0; ci < nu; ++ci) {
        Index c = cols[ci];
        // Clear entries at used rows with earlier pivot columns.
        for (Index ce : processed) {
          Index v = pivot_row_of[ce];
          if (r(v, c).is_zero()) continue;
          GaussianRational f = r(v, c);
          // Column op c -= f * ce, allowed by the processing order.
          u.cols[c] -= f * u.cols[ce];
          r.col(c) -= f * r.col(ce);
          if (l_match_row[ce] >= 0) {
            // Repair at vl: add the matched row of ce into the matched row of c.
            if (l_match_row[c] < 0)
              throw std::logic_error("decompose: l-matched column added into l-free column");
            sw.add_into(static_cast<int>(ui - 1), l_match_row[c], l_match_row[ce],
                        GaussianRational(-1) * f);
            // l matrix is unchanged by construction (0/1 matching pattern).
          }
        }
        // Pivot search on unused rows.
        Index pv = -1;
        for (Index v = 0; v < nr && pv < 0; ++v)
          if (!row_used[v] && !r(v, c).is_zero()) pv = v;
        if (pv < 0) continue;
        GaussianRational inv = inverse(r(pv, c));
        if (inv != GaussianRational(1)) {
          // Scale the vr basis vector (bare, no cascade).
          vr.cols[pv] *= r(pv, c);
          r.row(pv) *= inv;
        }
        // Clear the pivot column at other unused rows (free row ops on vr:
        // basis change new_pv_vec = pv_vec + f * other_vec).
        for (Index v = 0; v < nr; ++v) {
          if (v == pv || row_used[v] || r(v, c).is_zero()) continue;
          GaussianRational f = r(v, c);
          vr.cols[pv] += f * vr.cols[v];
          r.row(v) -= f * r.row(pv);
        }
        // Clear the pivot row at all later columns.
        for (Index cj = ci + 1; cj < nu; ++cj) {
          Index c2 = cols[cj];
          if (r(pv, c2).is_zero()) continue;
          GaussianRational f = r(pv, c2);
          u.cols[c2] -= f * u.cols[c];
          r.col(c2) -= f * r.col(c);
          if (l_match_row[c] >= 0) {
            if (l_match_row[c2] < 0)
              throw std::logic_error("decompose: matched column added into l-free column");
            sw.add_into(static_cast<int>(ui - 1), l_match_row[c2], l_match_row[c],
                        GaussianRational(-1) * f);
          }
        }
        row_used[pv] = true;
        pivot_row_of[c] = pv;
        processed.push_back(c);
      }

      // --- Bookkeeping: extend, open and close threads.
      for (Index c = 0; c < nu; ++c) {
        Index w = l_match_row[c];
        Index v = pivot_row_of[c];
        if (w >= 0) {
          int tid = vl.thread[w];
          if (tid < 0) {
            // Bare sink vector becomes the left end of a new thread.
            tid = static_cast<int>(sw.threads.size());
            sw.threads.push_back({});
            sw.threads[tid].points.push_back({static_cast<int>(ui - 1), w});
            vl.thread[w] = tid;
            vl.type_a[w] = static_cast<int>(ui - 1);
          }
          sw.threads[tid].points.push_back({static_cast<int>(ui), c});
          u.thread[c] = tid;
          if (v >= 0) {
            sw.threads[tid].points.push_back({static_cast<int>(ui + 1), v});
            vr.thread[v] = tid;
            vr.type_a[v] = vl.type_a[w];
          } else {
            close_thread(tid);
          }
        } else {
          if (v < 0) throw std::logic_error("decompose: dot inside the source block");
          int tid = static_cast<int>(sw.threads.size());
          sw.threads.push_back({});
          sw.threads[tid].points.push_back({static_cast<int>(ui), c});
          sw.threads[tid].points.push_back({static_cast<int>(ui + 1), v});
          u.thread[c] = tid;
          vr.thread[v] = tid;
          vr.type_a[v] = static_cast<int>(ui);
        }
      }
      // vl rows never matched by this source: their threads are complete.
      for (Index w = 0; w < nl; ++w) {
        if (row_match_col[w] >= 0) continue;
        if (vl.thread[w] < 0)
          throw std::logic_error("decompose: uncovered sink vector");
        close_thread(vl.thread[w]);
      }
    }
  }
  // Close whatever reaches the right end of the path.
  if (!path.empty()) {
    PairSpace& last = path.back();
    for (Index w = 0; w < static_cast<Index>(last.cols.size()); ++w) {
      if (last.thread[w] < 0)
        throw std::logic_error("decompose: uncovered sink vector at path end");
      close_thread(last.thread[w]);
    }
  }
}

}  // namespace

std::map<IndecompSpec, Index> DecompositionCertificate::multiplicities() const {
  std::map<IndecompSpec, Index> out;
  for (const auto& p : parts) ++out[p.spec];
  return out;
}

DecompositionCertificate decompose(const Bicomplex& input) {
  if (validation_enabled()) input.assert_valid("decompose input");
  Phase1Result p1 = phase1(input);
  const Bicomplex& a = p1.minimal;

  DecompositionCertificate cert;
  std::map<BiDegree, std::vector<ExactVector>> final_cols = p1.square_cols;
  std::vector<DecompositionCertificate::Part> parts = p1.square_parts;

  // Three-way split of every active space: [sources U | sinks I | dots D].
  std::map<BiDegree, ExactMatrix> u_block, i_block, d_block;
  for (BiDegree d : a.bidegrees()) {
    ExactMatrix kk = intersect_subspaces(kernel_basis(a.del(d)), kernel_basis(a.dbar(d)));
    ExactMatrix img =
        image_basis(hcat(a.del({d.p - 1, d.q}), a.dbar({d.p, d.q - 1})));
    u_block[d] = complement_columns(kk, a.dim(d));
    i_block[d] = img;
    // Dots: complement of img inside span(kk).
    auto img_in_kk = solve(kk, img);
    if (!img_in_kk) throw std::logic_error("decompose: image not inside ker∩ker");
    ExactMatrix comp = complement_columns(*img_in_kk, kk.cols());
    d_block[d] = ExactMatrix(kk * comp);
  }

  // Dots are parts on their own.
  for (BiDegree d : a.bidegrees()) {
    const ExactMatrix& dots = d_block.at(d);
    for (Index j = 0; j < dots.cols(); ++j) {
      DecompositionCertificate::Part part;
      part.spec = IndecompSpec::dot(d);
      parts.push_back(part);
      final_cols[d].push_back(p1.embed.at(d) * ExactVector(dots.col(j)));
    }
  }

  // Degree pairs {k, k+1}.
  int kmin = a.empty() ? 0 : a.min_total_degree();
  int kmax = a.empty() ? -1 : a.max_total_degree();
  for (int k = kmin; k < kmax + 1; ++k) {
    // Sources live at level k; find the p-range of the pair.
    bool any = false;
    int p_hi = 0, p_lo = 0;
    for (BiDegree d : a.bidegrees()) {
      if (d.total() != k || u_block.at(d).cols() == 0) continue;
      if (!any) {
        p_hi = p_lo = d.p;
        any = true;
      }
      p_hi = std::max(p_hi, d.p);
      p_lo = std::min(p_lo, d.p);
    }
    if (!any) continue;

    PairSweep sw;
    sw.a = &a;
    for (int p = p_hi; p >= p_lo; --p) {
      if (p == p_hi) {
        PairSpace v;
        v.deg = {p + 1, k - p};
        v.is_sink = true;
        const ExactMatrix& ib = i_block.count(v.deg) ? i_block.at(v.deg)
                                                     : exact_zero(a.dim(v.deg), 0);
        for (Index j = 0; j < ib.cols(); ++j) {
          v.cols.push_back(ib.col(j));
          v.thread.push_back(-1);
          v.type_a.push_back(static_cast<int>(sw.path.size()));
        }
        sw.path.push_back(std::move(v));
      }
      PairSpace us;
      us.deg = {p, k - p};
      if (u_block.count(us.deg)) {
        const ExactMatrix& ub = u_block.at(us.deg);
        for (Index j = 0; j < ub.cols(); ++j) {
          us.cols.push_back(ub.col(j));
          us.thread.push_back(-1);
          us.type_a.push_back(-1);
        }
      }
      sw.path.push_back(std::move(us));
      PairSpace v;
      v.deg = {p, k - p + 1};
      v.is_sink = true;
      const ExactMatrix& ib =
          i_block.count(v.deg) ? i_block.at(v.deg) : exact_zero(a.dim(v.deg), 0);
      for (Index j = 0; j < ib.cols(); ++j) {
        v.cols.push_back(ib.col(j));
        v.thread.push_back(-1);
        v.type_a.push_back(static_cast<int>(sw.path.size()));
      }
      sw.path.push_back(std::move(v));
    }
    run_pair(sw, parts, final_cols, p1.embed);
  }

  // Assemble the certificate: per bidegree, columns in part order (each part
  // appended its columns to final_cols when it was finished, in this order).
  std::map<BiDegree, std::vector<ExactVector>> ordered;
  std::vector<DecompositionCertificate::Part> ordered_parts;
  {
    // Recompute part column assignments deterministically: walk parts in the
    // order they were produced and pop columns from final_cols front.
    std::map<BiDegree, size_t> next;
    for (auto& part : parts) {
      std::vector<BiDegree> support;
      if (part.spec.kind == IndecompSpec::Kind::Square) {
        BiDegree anc = part.spec.anchor;
        support = {anc, {anc.p + 1, anc.q}, {anc.p, anc.q + 1}, {anc.p + 1, anc.q + 1}};
      } else {
        support = part.spec.vertices;
      }
      for (BiDegree d : support) {
        part.column[d] = static_cast<Index>(ordered[d].size());
        ordered[d].push_back(final_cols.at(d).at(next[d]++));
      }
      ordered_parts.push_back(part);
    }
  }
  cert.parts = std::move(ordered_parts);
  for (auto& [d, cols] : ordered) {
    ExactMatrix p(input.dim(d), static_cast<Index>(cols.size()));
    for (Index j = 0; j < p.cols(); ++j) p.col(j) = cols[j];
    if (p.cols() != input.dim(d))
      throw std::logic_error("decompose: basis column count mismatch at " + to_string(d));
    cert.basis_change[d] = std::move(p);
  }

  auto bad = verify_certificate(cert, input);
  if (!bad.empty()) throw std::logic_error("decompose: certificate failed: " + bad.front());
  return cert;
}

std::vector<std::string> verify_certificate(const DecompositionCertificate& cert,
                                            const Bicomplex& a) {
  std::vector<std::string> bad;
  // Expected canonical blocks.
  std::map<BiDegree, ExactMatrix> exp_del, exp_dbar;
  for (BiDegree d : a.bidegrees()) {
    exp_del[d] = exact_zero(a.dim({d.p + 1, d.q}), a.dim(d));
    exp_dbar[d] = exact_zero(a.dim({d.p, d.q + 1}), a.dim(d));
  }
  for (const auto& part : cert.parts) {
    if (part.spec.kind == IndecompSpec::Kind::Square) {
      BiDegree anc = part.spec.anchor;
      BiDegree r{anc.p + 1, anc.q}, up{anc.p, anc.q + 1}, t{anc.p + 1, anc.q + 1};
      exp_del[anc](part.column.at(r), part.column.at(anc)) = GaussianRational(1);
      exp_del[up](part.column.at(t), part.column.at(up)) = GaussianRational(1);
      exp_dbar[anc](part.column.at(up), part.column.at(anc)) = GaussianRational(1);
      exp_dbar[r](part.column.at(t), part.column.at(r)) = GaussianRational(-1);
    } else {
      for (const auto& [from, to] : part.spec.edges) {
        if (to - from == BiDegree{1, 0})
          exp_del[from](part.column.at(to), part.column.at(from)) = GaussianRational(1);
        else
          exp_dbar[from](part.column.at(to), part.column.at(from)) = GaussianRational(1);
      }
    }
  }
  for (BiDegree d : a.bidegrees()) {
    auto it = cert.basis_change.find(d);
    if (it == cert.basis_change.end() || it->second.cols() != a.dim(d) ||
        rank(it->second) != a.dim(d)) {
      bad.push_back("basis change not invertible at " + to_string(d));
      continue;
    }
  }
  if (!bad.empty()) return bad;
  auto pinv = [&](BiDegree d) {
    auto it = cert.basis_change.find(d);
    if (it == cert.basis_change.end()) return exact_zero(0, 0);
    return inverse_matrix(it->second);
  };
  for (BiDegree d : a.bidegrees()) {
    if (a.dim({d.p + 1, d.q}) > 0) {
      ExactMatrix got = pinv({d.p + 1, d.q}) * a.del(d) * cert.basis_change.at(d);
      if (got != exp_del.at(d)) bad.push_back("del block mismatch at " + to_string(d));
    } else if (!is_zero_matrix(a.del(d))) {
      bad.push_back("del block mismatch at " + to_string(d));
    }
    if (a.dim({d.p, d.q + 1}) > 0) {
      ExactMatrix got = pinv({d.p, d.q + 1}) * a.dbar(d) * cert.basis_change.at(d);
      if (got != exp_dbar.at(d)) bad.push_back("dbar block mismatch at " + to_string(d));
    } else if (!is_zero_matrix(a.dbar(d))) {
      bad.push_back("dbar block mismatch at " + to_string(d));
    }
  }
  return bad;
}

ZigSquareSplit zig_square_split(const Bicomplex& a) {
  DecompositionCertificate cert = decompose(a);
  ZigSquareSplit out;
  bool have_zig = false, have_sq = false;
  std::vector<const DecompositionCertificate::Part*> order;
  for (const auto& part : cert.parts)
    if (part.spec.kind != IndecompSpec::Kind::Square) order.push_back(&part);
  size_t zig_count = order.size();
  for (const auto& part : cert.parts)
    if (part.spec.kind == IndecompSpec::Kind::Square) order.push_back(&part);

  Bicomplex zig, sq;
  for (size_t i = 0; i < order.size(); ++i) {
    Bicomplex piece = build_indecomposable(order[i]->spec);
    if (i < zig_count) {
      zig = have_zig ? direct_sum(zig, piece) : piece;
      have_zig = true;
    } else {
      sq = have_sq ? direct_sum(sq, piece) : piece;
      have_sq = true;
    }
  }
  out.zig = zig;
  out.sq = sq;
  Bicomplex total = direct_sum(zig, sq);
  BicomplexMorphism iso{total, a, {}};
  for (BiDegree d : total.bidegrees()) {
    ExactMatrix m = exact_zero(a.dim(d), total.dim(d));
    iso.components[d] = m;
  }
  std::map<BiDegree, Index> next;
  for (const auto* part : order) {
    std::vector<BiDegree> support;
    if (part->spec.kind == IndecompSpec::Kind::Square) {
      BiDegree anc = part->spec.anchor;
      support = {anc, {anc.p + 1, anc.q}, {anc.p, anc.q + 1}, {anc.p + 1, anc.q + 1}};
    } else {
      support = part->spec.vertices;
    }
    for (BiDegree d : support) {
      iso.components[d].col(next[d]++) =
          cert.basis_change.at(d).col(part->column.at(d));
    }
  }
  for (auto it = iso.components.begin(); it != iso.components.end();) {
    if (is_zero_matrix(it->second))
      it = iso.components.erase(it);
    else
      ++it;
  }
  out.iso = std::move(iso);
  if (validation_enabled()) {
    out.iso.assert_valid("zig_square_split iso");
    if (!is_isomorphism(out.iso))
      throw std::logic_error("zig_square_split: comparison map is not an isomorphism");
  }
  return out;
}

std::map<IndecompSpec, Index> multiplicities_report(const Bicomplex& a) {
  return decompose(a).multiplicities();
}

}  // namespace bigraded
