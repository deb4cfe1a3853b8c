#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace onepm {

/// Failure categories shared by every module. The CLI maps them onto exit codes.
enum class Errc {
  invalid_edge,
  duplicate_edge,
  bad_vertex,
  empty_graph,
  invalid_drawing,
  not_bipartite,
  bigon_present,
  not_on_face,
  would_create_bigon,
  bad_attachment,
  too_small,
  bad_parity,
  too_many_crossings,
  unimplemented,
  too_large,
  empty_t,
  degree_too_low,
  not_independent,
  s_too_small,
  no_provenance,
  parse_error,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_edge: return "InvalidEdge";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::bad_vertex: return "BadVertex";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::invalid_drawing: return "InvalidDrawing";
    case Errc::not_bipartite: return "NotBipartite";
    case Errc::bigon_present: return "BigonPresent";
    case Errc::not_on_face: return "NotOnFace";
    case Errc::would_create_bigon: return "WouldCreateBigon";
    case Errc::bad_attachment: return "BadAttachment";
    case Errc::too_small: return "TooSmall";
    case Errc::bad_parity: return "BadParity";
    case Errc::too_many_crossings: return "TooManyCrossings";
    case Errc::unimplemented: return "Unimplemented";
    case Errc::too_large: return "TooLarge";
    case Errc::empty_t: return "EmptyT";
    case Errc::degree_too_low: return "DegreeTooLow";
    case Errc::not_independent: return "NotIndependent";
    case Errc::s_too_small: return "STooSmall";
    case Errc::no_provenance: return "NoProvenance";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace onepm
