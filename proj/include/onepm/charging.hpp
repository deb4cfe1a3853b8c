#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "onepm/embedding.hpp"
#include "onepm/error.hpp"
#include "onepm/graph.hpp"

namespace onepm {

enum class ChargeClass : int { uncrossed = 6, crossed = 3, delta = 2 };

struct DeltaVertex {
  Vertex id = -1;
  std::array<Vertex, 3> attach{};
};

/// Record of one run of the charging scheme.
///
/// Edge ids of `final_drawing` extend those of `augmented`, which extend
/// those of `base`: base edges, then added chords, then the star edges.
struct ChargeLedger {
  OnePlanarDrawing source;         // as given
  OnePlanarDrawing base;           // S-S edges removed
  OnePlanarDrawing augmented;      // chords added
  OnePlanarDrawing final_drawing;  // region vertices added
  VertexSet s;
  VertexSet t;
  std::vector<Edge> added_chords;
  std::vector<DeltaVertex> delta_vertices;
  std::vector<Edge> delta_edges;
  std::vector<int> charge_class;  // per edge of final_drawing
  std::map<Vertex, std::int64_t> vertex_charge;
  std::int64_t sum_of_charges = 0;
  std::int64_t rhs_bound = 0;
  std::vector<std::string> step_violations;
};

struct VerificationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct ChargingOptions {
  /// Unset: faces by id, candidates by (s, t). Set: both shuffled per scan.
  std::optional<std::uint64_t> shuffle_seed;
};

namespace detail {

/// New uncrossed edge joining two pvertices that lie in different faces (or
/// an isolated pvertex, anchor unset). Merges the two faces into one.
inline int join_corners(OnePlanarDrawing& d, int pa, std::optional<SegmentEnd> anchor_a, int pb,
                        std::optional<SegmentEnd> anchor_b) {
  const int eid = d.add_edge(d.pvertex(pa).vid, d.pvertex(pb).vid);
  const int sid = d.add_segment(pa, pb, eid, 0);
  d.insert_before(pa, {sid, 0}, anchor_a);
  d.insert_before(pb, {sid, 1}, anchor_b);
  return eid;
}

/// Joins every component of the planarization to the one holding `t_root`
/// with an S-T edge. Returns the added edges.
inline std::vector<Edge> connect_components(OnePlanarDrawing& d, const VertexSet& s, Vertex t_root) {
  std::vector<Edge> added;
  for (;;) {
    const auto [count, comp] = planarization_components(d);
    if (count <= 1) break;
    const int main = comp[d.real_pid(t_root)];
    int other = -1;
    for (int p = 0; p < d.pvertex_count() && other < 0; ++p)
      if (comp[p] != main) other = comp[p];

    const auto all = trace_faces(d);
    std::optional<std::pair<int, SegmentEnd>> t_corner;
    std::optional<std::pair<int, std::optional<SegmentEnd>>> s_corner;
    for (const Face& f : all) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        const PVertex& pv = d.pvertex(f.corners[i]);
        if (pv.dummy) continue;
        const int c = comp[f.corners[i]];
        if (c == main && !t_corner && !s.contains(pv.vid)) t_corner = {{f.corners[i], f.walk[i]}};
        if (c == other && !s_corner && s.contains(pv.vid)) s_corner = {{f.corners[i], f.walk[i]}};
      }
    }
    if (!s_corner) {
      // Isolated vertex: no faces of its own.
      for (int p = 0; p < d.pvertex_count(); ++p)
        if (comp[p] == other && d.rotation(p).empty()) s_corner = {{p, std::nullopt}};
    }
    if (!t_corner || !s_corner) fail(Errc::invalid_drawing, "cannot connect components with an S-T edge");
    join_corners(d, s_corner->first, s_corner->second, t_corner->first, t_corner->second);
    added.push_back(Edge{d.pvertex(s_corner->first).vid, d.pvertex(t_corner->first).vid}.normalized());
  }
  return added;
}

struct ChordCandidate {
  Vertex s_vid;
  Vertex t_vid;
  std::size_t i;
  std::size_t j;
};

/// Adds S-T chords inside faces until none can be added without a bigon.
inline std::vector<Edge> saturate_chords(OnePlanarDrawing& d, const VertexSet& s, std::optional<std::uint64_t> seed) {
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  std::vector<Edge> added;
  for (;;) {
    auto all = trace_faces(d);
    if (rng) std::shuffle(all.begin(), all.end(), *rng);
    bool inserted = false;
    for (const Face& f : all) {
      std::vector<ChordCandidate> cands;
      const std::size_t k = f.size();
      for (std::size_t i = 0; i < k; ++i) {
        const PVertex& a = d.pvertex(f.corners[i]);
        if (a.dummy || !s.contains(a.vid)) continue;
        for (std::size_t j = 0; j < k; ++j) {
          const PVertex& b = d.pvertex(f.corners[j]);
          if (b.dummy || s.contains(b.vid)) continue;
          const auto [x, y] = split_sizes(k, i, j);
          if (x >= 3 && y >= 3) cands.push_back({a.vid, b.vid, i, j});
        }
      }
      if (cands.empty()) continue;
      if (rng) std::shuffle(cands.begin(), cands.end(), *rng);
      else
        std::sort(cands.begin(), cands.end(), [](const ChordCandidate& x, const ChordCandidate& y) {
          return std::tie(x.s_vid, x.t_vid, x.i, x.j) < std::tie(y.s_vid, y.t_vid, y.i, y.j);
        });
      const ChordCandidate& c = cands.front();
      add_chord_at(d, f, c.i, c.j);
      added.push_back(Edge{c.s_vid, c.t_vid}.normalized());
      inserted = true;
      break;
    }
    if (!inserted) break;
  }
  return added;
}

/// T-vertices whose rotation holds three cyclically consecutive crossed edges.
inline std::vector<Vertex> three_consecutive_crossed(const OnePlanarDrawing& d, const VertexSet& t) {
  const auto crossed = d.crossed_flags();
  std::vector<Vertex> out;
  for (Vertex v : t) {
    const auto& rot = d.rotation(d.real_pid(v));
    const std::size_t r = rot.size();
    if (r < 3) continue;
    for (std::size_t i = 0; i < r; ++i) {
      auto is_x = [&](std::size_t k) { return crossed[d.segment(rot[(i + k) % r].segment).edge] != 0; };
      if (is_x(0) && is_x(1) && is_x(2)) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

/// Distinct T-vertices on the corners of `f`, ascending.
inline std::vector<Vertex> t_corners(const OnePlanarDrawing& d, const Face& f, const VertexSet& t) {
  std::vector<Vertex> out;
  for (int p : f.corners) {
    const PVertex& pv = d.pvertex(p);
    if (!pv.dummy && t.contains(pv.vid)) out.push_back(pv.vid);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Runs Steps 0-3 of the charging scheme on `d` with partition (s, t).
inline ChargeLedger charging_run(const OnePlanarDrawing& d, const VertexSet& s, const VertexSet& t,
                                 ChargingOptions options = {}) {
  require_valid(d);
  if (d.mode() != EdgeMode::simple) fail(Errc::invalid_drawing, "graph must be simple");
  const Graph g = d.graph();
  s.require_within(g.vertex_count());
  t.require_within(g.vertex_count());
  if (!(t == s.complement(g.vertex_count()))) fail(Errc::bad_vertex, "T must be the complement of S");
  if (s.size() < 3) fail(Errc::s_too_small, "|S| must be at least 3");
  if (t.empty()) fail(Errc::empty_t, "T must be non-empty");
  for (Vertex v : t)
    if (g.degree(v) < 3) fail(Errc::degree_too_low, "vertex " + std::to_string(v) + " in T has degree " + std::to_string(g.degree(v)));
  if (!is_independent(g, t)) fail(Errc::not_independent, "T is not independent");

  ChargeLedger L;
  L.source = d;
  L.s = s;
  L.t = t;

  // Step 0: make the graph bipartite.
  std::vector<int> inside;
  for (int e = 0; e < d.edge_count(); ++e)
    if (s.contains(d.edge(e).u) && s.contains(d.edge(e).v)) inside.push_back(e);
  L.base = remove_edges(d, inside).drawing;

  // Step 1: uncrossed S-T chords, parallel copies allowed.
  OnePlanarDrawing work = L.base;
  work.set_mode(EdgeMode::multi);
  L.added_chords = detail::connect_components(work, s, *t.begin());
  for (const Edge& e : detail::saturate_chords(work, s, options.shuffle_seed)) L.added_chords.push_back(e);
  L.augmented = work;
  for (Vertex v : detail::three_consecutive_crossed(work, t))
    L.step_violations.push_back("vertex " + std::to_string(v) + " has three consecutive crossed edges after chord saturation");

  // Step 2: a new S-side vertex in every face with three or more T-corners.
  const int augmented_edges = work.edge_count();
  for (int guard = 0;; ++guard) {
    if (guard > 4 * work.pvertex_count() + 16) {
      L.step_violations.push_back("region vertex insertion did not terminate");
      break;
    }
    bool inserted = false;
    for (const Face& f : detail::trace_faces(work)) {
      const auto ts = detail::t_corners(work, f, t);
      if (ts.size() < 3) continue;
      std::vector<std::size_t> positions;
      for (std::size_t k = 0; k < 3; ++k) positions.push_back(detail::corner_position(f, work.real_pid(ts[k])));
      const Vertex z = detail::add_star_at(work, f, positions);
      L.delta_vertices.push_back({z, {ts[0], ts[1], ts[2]}});
      for (std::size_t k = 0; k < 3; ++k) L.delta_edges.push_back(Edge{ts[k], z}.normalized());
      inserted = true;
      break;
    }
    if (!inserted) break;
  }
  for (const Face& f : detail::trace_faces(work))
    if (detail::t_corners(work, f, t).size() >= 3)
      L.step_violations.push_back("face " + std::to_string(f.id) + " still has three T-corners");
  L.final_drawing = work;

  // Step 3: charges.
  const auto crossed = work.crossed_flags();
  L.charge_class.resize(static_cast<std::size_t>(work.edge_count()));
  for (Vertex v : t) L.vertex_charge[v] = 0;
  for (int e = 0; e < work.edge_count(); ++e) {
    const ChargeClass c = e >= augmented_edges ? ChargeClass::delta : crossed[e] ? ChargeClass::crossed : ChargeClass::uncrossed;
    L.charge_class[e] = static_cast<int>(c);
    L.sum_of_charges += L.charge_class[e];
    for (Vertex x : {work.edge(e).u, work.edge(e).v})
      if (t.contains(x)) L.vertex_charge[x] += L.charge_class[e];
  }
  L.rhs_bound = 12 * static_cast<std::int64_t>(s.size()) + 12 * static_cast<std::int64_t>(t.size()) - 24;
  return L;
}

/// Re-derives every claim of the charging argument from the ledger.
inline VerificationReport charge_verify(const ChargeLedger& L) {
  VerificationReport r;
  auto bad = [&](std::string msg) { r.violations.push_back(std::move(msg)); };
  for (const auto& v : L.step_violations) bad(v);

  const OnePlanarDrawing& fd = L.final_drawing;
  const auto report = validate(fd);
  for (const auto& v : report.violations) bad("final drawing: " + v);
  if (!report.ok()) return r;

  const int aug_edges = L.augmented.edge_count();
  const int base_edges = L.base.edge_count();
  if (L.delta_edges.size() != 3 * L.delta_vertices.size()) bad("|E_delta| != 3|S_delta|");
  if (fd.edge_count() != aug_edges + static_cast<int>(L.delta_edges.size())) bad("final edge count mismatch");
  if (aug_edges != base_edges + static_cast<int>(L.added_chords.size())) bad("chord count mismatch");
  if (static_cast<int>(L.charge_class.size()) != fd.edge_count()) bad("charge table size mismatch");
  if (!r.ok()) return r;

  const auto crossed = fd.crossed_flags();
  for (int e = base_edges; e < fd.edge_count(); ++e)
    if (crossed[e]) bad("added edge " + std::to_string(e) + " is crossed");

  // Every edge has exactly one T endpoint; recompute all totals.
  std::int64_t e_minus = 0, e_cross = 0, e_delta = 0, sum = 0;
  std::map<Vertex, std::int64_t> charge;
  std::map<Vertex, int> uncrossed_in_aug;
  for (Vertex v : L.t) charge[v] = 0;
  for (int e = 0; e < fd.edge_count(); ++e) {
    const int expect = e >= aug_edges ? 2 : crossed[e] ? 3 : 6;
    if (L.charge_class[e] != expect) bad("edge " + std::to_string(e) + " has charge class " + std::to_string(L.charge_class[e]));
    if (e >= aug_edges) ++e_delta;
    else if (crossed[e]) ++e_cross;
    else ++e_minus;
    sum += L.charge_class[e];
    const Edge& ed = fd.edge(e);
    const int t_ends = static_cast<int>(L.t.contains(ed.u)) + static_cast<int>(L.t.contains(ed.v));
    if (t_ends != 1) bad("edge " + std::to_string(e) + " has " + std::to_string(t_ends) + " T endpoints");
    for (Vertex x : {ed.u, ed.v}) {
      if (!L.t.contains(x)) continue;
      charge[x] += L.charge_class[e];
      if (e < aug_edges && !crossed[e]) ++uncrossed_in_aug[x];
    }
  }
  if (sum != L.sum_of_charges) bad("stored sum " + std::to_string(L.sum_of_charges) + " != recomputed " + std::to_string(sum));
  if (sum != 6 * e_minus + 3 * e_cross + 2 * e_delta) bad("charge sum identity fails");
  if (charge != L.vertex_charge) bad("stored vertex charges differ from recomputed ones");
  std::int64_t total_ct = 0;
  for (const auto& [v, c] : charge) total_ct += c;
  if (total_ct != sum) bad("sum of c(t) " + std::to_string(total_ct) + " != sum of charges " + std::to_string(sum));
  const std::int64_t rhs = 12 * static_cast<std::int64_t>(L.s.size()) + 12 * static_cast<std::int64_t>(L.t.size()) - 24;
  if (rhs != L.rhs_bound) bad("stored rhs differs");
  if (sum > rhs) bad("sum of charges " + std::to_string(sum) + " exceeds " + std::to_string(rhs));

  // Edge count of the bipartite bigon-free final drawing.
  if (!bigons(fd).empty()) bad("final drawing has a bigon");
  if (2 * (e_minus + e_delta) + e_cross > 2 * (2 * static_cast<std::int64_t>(fd.real_count()) - 4))
    bad("final drawing exceeds the bipartite edge bound");

  const Graph g = L.source.graph();
  for (Vertex v : L.t) {
    const std::int64_t c = charge[v];
    const int deg = g.degree(v);
    const int cw = crossing_weighted_degree(L.source, L.source.real_pid(v));
    const std::string who = "vertex " + std::to_string(v) + ": c(t) = " + std::to_string(c);
    if (c < 14) bad(who + " < 14");
    if (uncrossed_in_aug[v] >= 2 && c < 3 * deg + 6) bad(who + " < 3 deg + 6 = " + std::to_string(3 * deg + 6));
    if (c < 3 * cw) bad(who + " < 3 cw = " + std::to_string(3 * cw));
  }
  return r;
}

/// Text dump: `ledger`, then chord, deltav, charge, ct records, then `total`.
inline std::string format_ledger(const ChargeLedger& L) {
  std::ostringstream out;
  out << "ledger\n";
  auto chords = L.added_chords;
  std::sort(chords.begin(), chords.end());
  for (const Edge& e : chords) out << "chord " << e.u << ' ' << e.v << '\n';
  auto deltas = L.delta_vertices;
  std::sort(deltas.begin(), deltas.end(), [](const DeltaVertex& a, const DeltaVertex& b) { return a.id < b.id; });
  for (const DeltaVertex& z : deltas) out << "deltav " << z.id << ' ' << z.attach[0] << ' ' << z.attach[1] << ' ' << z.attach[2] << '\n';
  for (std::size_t e = 0; e < L.charge_class.size(); ++e) out << "charge " << e << ' ' << L.charge_class[e] << '\n';
  for (const auto& [v, c] : L.vertex_charge) out << "ct " << v << ' ' << c << '\n';
  out << "total " << L.sum_of_charges << ' ' << L.rhs_bound << '\n';
  return out.str();
}

}  // namespace onepm
