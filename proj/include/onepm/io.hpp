#pragma once

// Text formats. All writers emit ASCII with LF line endings and sorted records.
//
//   edge list:  graph <n> <m>          then m lines  e <u> <v>   (u < v, sorted by (u, v))
//   1PG v1:     1pg <n_real> <n_dummy> <n_segments>
//               pv <pid> real <vid>  |  pv <pid> dummy <eid_a> <eid_b>
//               seg <sid> <pid_a> <pid_b> <eid> <part>
//               rot <pid>: <sid.end ...>   (cyclic order, starting at the smallest end)
//   witness:    S: <vid ...>
//               deficiency: <d>
//               matching_upper: <u>

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "onepm/embedding.hpp"
#include "onepm/error.hpp"
#include "onepm/graph.hpp"

namespace onepm {

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

inline long parse_int(const std::string& word, int line_no) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != word.size() || word.empty())
    fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected an integer, got '" + word + "'");
  return value;
}

inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') fail(Errc::parse_error, "CRLF line endings are not accepted");
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace detail

// --- edge list -------------------------------------------------------------

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline Graph parse_edge_list(std::istream& in, EdgeMode mode = EdgeMode::simple) {
  const auto lines = detail::read_lines(in);
  if (lines.empty()) fail(Errc::parse_error, "empty input");
  const auto head = detail::split_words(lines[0]);
  if (head.size() != 3 || head[0] != "graph") fail(Errc::parse_error, "line 1: expected 'graph <n> <m>'");
  const long n = detail::parse_int(head[1], 1);
  const long m = detail::parse_int(head[2], 1);
  if (n < 0 || m < 0) fail(Errc::parse_error, "line 1: negative counts");
  if (static_cast<long>(lines.size()) - 1 != m)
    fail(Errc::parse_error, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const auto w = detail::split_words(lines[i]);
    if (w.size() != 3 || w[0] != "e") fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
    edges.push_back({static_cast<Vertex>(detail::parse_int(w[1], line_no)), static_cast<Vertex>(detail::parse_int(w[2], line_no))});
  }
  return build_graph(static_cast<int>(n), edges, mode);
}

inline Graph parse_edge_list(const std::string& text, EdgeMode mode = EdgeMode::simple) {
  std::istringstream in(text);
  return parse_edge_list(in, mode);
}

// --- 1PG v1 ----------------------------------------------------------------

inline std::string format_1pg(const OnePlanarDrawing& d) {
  std::ostringstream out;
  out << "1pg " << d.real_count() << ' ' << d.dummy_count() << ' ' << d.segment_count() << '\n';
  for (int p = 0; p < d.pvertex_count(); ++p) {
    const PVertex& pv = d.pvertex(p);
    if (pv.dummy) out << "pv " << p << " dummy " << pv.edge_a << ' ' << pv.edge_b << '\n';
    else out << "pv " << p << " real " << pv.vid << '\n';
  }
  for (int s = 0; s < d.segment_count(); ++s) {
    const Segment& seg = d.segment(s);
    out << "seg " << s << ' ' << seg.a << ' ' << seg.b << ' ' << seg.edge << ' ' << seg.part << '\n';
  }
  for (int p = 0; p < d.pvertex_count(); ++p) {
    auto rot = d.rotation(p);
    if (!rot.empty()) std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
    out << "rot " << p << ':';
    for (const SegmentEnd& h : rot) out << ' ' << h.segment << '.' << h.end;
    out << '\n';
  }
  return out.str();
}

inline OnePlanarDrawing parse_1pg(std::istream& in, EdgeMode mode = EdgeMode::simple) {
  const auto lines = detail::read_lines(in);
  if (lines.empty()) fail(Errc::parse_error, "empty input");
  const auto head = detail::split_words(lines[0]);
  if (head.size() != 4 || head[0] != "1pg") fail(Errc::parse_error, "line 1: expected '1pg <n_real> <n_dummy> <n_segments>'");
  const long n_real = detail::parse_int(head[1], 1);
  const long n_dummy = detail::parse_int(head[2], 1);
  const long n_seg = detail::parse_int(head[3], 1);
  if (n_real < 0 || n_dummy < 0 || n_seg < 0) fail(Errc::parse_error, "line 1: negative counts");
  const long np = n_real + n_dummy;
  if (static_cast<long>(lines.size()) != 1 + 2 * np + n_seg) fail(Errc::parse_error, "record count does not match header");

  std::vector<PVertex> pvs;
  std::size_t ln = 1;
  for (long p = 0; p < np; ++p, ++ln) {
    const int line_no = static_cast<int>(ln) + 1;
    const auto w = detail::split_words(lines[ln]);
    if (w.size() < 4 || w[0] != "pv" || detail::parse_int(w[1], line_no) != p)
      fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 'pv " + std::to_string(p) + " ...'");
    if (w[2] == "real" && w.size() == 4) {
      pvs.push_back({false, static_cast<Vertex>(detail::parse_int(w[3], line_no)), -1, -1});
    } else if (w[2] == "dummy" && w.size() == 5) {
      pvs.push_back({true, -1, static_cast<int>(detail::parse_int(w[3], line_no)), static_cast<int>(detail::parse_int(w[4], line_no))});
    } else {
      fail(Errc::parse_error, "line " + std::to_string(line_no) + ": bad pvertex record");
    }
  }
  if (std::count_if(pvs.begin(), pvs.end(), [](const PVertex& p) { return !p.dummy; }) != n_real)
    fail(Errc::parse_error, "real pvertex count does not match header");
  for (const PVertex& p : pvs)
    if (!p.dummy && (p.vid < 0 || p.vid >= n_real)) fail(Errc::parse_error, "vertex id out of range");

  std::vector<Segment> segs;
  for (long s = 0; s < n_seg; ++s, ++ln) {
    const int line_no = static_cast<int>(ln) + 1;
    const auto w = detail::split_words(lines[ln]);
    if (w.size() != 6 || w[0] != "seg" || detail::parse_int(w[1], line_no) != s)
      fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 'seg " + std::to_string(s) + " ...'");
    Segment seg{static_cast<int>(detail::parse_int(w[2], line_no)), static_cast<int>(detail::parse_int(w[3], line_no)),
                static_cast<int>(detail::parse_int(w[4], line_no)), static_cast<int>(detail::parse_int(w[5], line_no))};
    if (seg.a < 0 || seg.a >= np || seg.b < 0 || seg.b >= np || seg.edge < 0 || seg.part < 0 || seg.part > 1)
      fail(Errc::parse_error, "line " + std::to_string(line_no) + ": segment fields out of range");
    segs.push_back(seg);
  }

  // Recover edge endpoints from the segments' real ends.
  int n_edges = 0;
  for (const Segment& s : segs) n_edges = std::max(n_edges, s.edge + 1);
  std::vector<Vertex> first(static_cast<std::size_t>(n_edges), -1), second(static_cast<std::size_t>(n_edges), -1);
  for (const Segment& s : segs) {
    if (s.part == 0 && !pvs[s.a].dummy) first[s.edge] = pvs[s.a].vid;
    if (!pvs[s.b].dummy) second[s.edge] = pvs[s.b].vid;
  }
  for (int e = 0; e < n_edges; ++e)
    if (first[e] < 0 || second[e] < 0) fail(Errc::parse_error, "edge " + std::to_string(e) + " lacks a real endpoint");

  OnePlanarDrawing d(mode);
  for (const PVertex& p : pvs) {
    if (p.dummy) d.add_dummy(p.edge_a, p.edge_b);
    else d.add_real(p.vid);
  }
  for (int e = 0; e < n_edges; ++e) d.add_edge(first[e], second[e]);
  for (const Segment& s : segs) d.add_segment(s.a, s.b, s.edge, s.part);

  for (long p = 0; p < np; ++p, ++ln) {
    const int line_no = static_cast<int>(ln) + 1;
    const std::string& line = lines[ln];
    const std::string prefix = "rot " + std::to_string(p) + ":";
    if (line.compare(0, prefix.size(), prefix) != 0)
      fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected '" + prefix + "'");
    std::vector<SegmentEnd> rot;
    for (const std::string& w : detail::split_words(line.substr(prefix.size()))) {
      const auto dot = w.find('.');
      if (dot == std::string::npos) fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected <sid>.<end>");
      const long sid = detail::parse_int(w.substr(0, dot), line_no);
      const long end = detail::parse_int(w.substr(dot + 1), line_no);
      if (sid < 0 || sid >= n_seg || (end != 0 && end != 1))
        fail(Errc::parse_error, "line " + std::to_string(line_no) + ": segment end out of range");
      rot.push_back({static_cast<int>(sid), static_cast<int>(end)});
    }
    d.set_rotation(static_cast<int>(p), std::move(rot));
  }
  return d;
}

inline OnePlanarDrawing parse_1pg(const std::string& text, EdgeMode mode = EdgeMode::simple) {
  std::istringstream in(text);
  return parse_1pg(in, mode);
}

// --- witness sidecar -------------------------------------------------------

struct WitnessRecord {
  VertexSet s;
  long deficiency = 0;
  long matching_upper = 0;
};

inline std::string format_witness(const WitnessRecord& w) {
  std::ostringstream out;
  out << "S:";
  for (Vertex v : w.s) out << ' ' << v;
  out << "\ndeficiency: " << w.deficiency << "\nmatching_upper: " << w.matching_upper << '\n';
  return out.str();
}

inline WitnessRecord parse_witness(std::istream& in) {
  const auto lines = detail::read_lines(in);
  if (lines.size() != 3) fail(Errc::parse_error, "witness file needs exactly three lines");
  WitnessRecord w;
  auto s = detail::split_words(lines[0]);
  if (s.empty() || s[0] != "S:") fail(Errc::parse_error, "line 1: expected 'S: <vid ...>'");
  std::vector<Vertex> members;
  for (std::size_t i = 1; i < s.size(); ++i) members.push_back(static_cast<Vertex>(detail::parse_int(s[i], 1)));
  w.s = VertexSet(std::move(members));
  const auto d = detail::split_words(lines[1]);
  if (d.size() != 2 || d[0] != "deficiency:") fail(Errc::parse_error, "line 2: expected 'deficiency: <d>'");
  w.deficiency = detail::parse_int(d[1], 2);
  const auto u = detail::split_words(lines[2]);
  if (u.size() != 2 || u[0] != "matching_upper:") fail(Errc::parse_error, "line 3: expected 'matching_upper: <u>'");
  w.matching_upper = detail::parse_int(u[1], 3);
  return w;
}

inline WitnessRecord parse_witness(const std::string& text) {
  std::istringstream in(text);
  return parse_witness(in);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace onepm
