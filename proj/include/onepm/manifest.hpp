#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "onepm/error.hpp"
#include "onepm/io.hpp"

namespace onepm {

/// 64-bit FNV-1a, printed as 16 lowercase hex digits.
inline std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// What a CLI run consumed and produced, enough to replay it.
///
///   manifest 1
///   command <name>
///   argv <token>            (one per token, in order)
///   arg <key> <value>       (sorted by key)
///   input <digest> <path>
///   output <digest> <path>  (`-` is standard output)
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::vector<std::pair<std::string, std::string>> arguments;
  std::vector<std::pair<std::string, std::string>> input_digests;   // path, digest
  std::vector<std::pair<std::string, std::string>> outputs;         // path, digest
};

inline std::string format_manifest(const RunManifest& m) {
  auto args = m.arguments;
  std::sort(args.begin(), args.end());
  std::ostringstream out;
  out << "manifest 1\n";
  out << "command " << m.command << '\n';
  for (const auto& a : m.argv) out << "argv " << a << '\n';
  for (const auto& [k, v] : args) out << "arg " << k << ' ' << v << '\n';
  for (const auto& [p, d] : m.input_digests) out << "input " << d << ' ' << p << '\n';
  for (const auto& [p, d] : m.outputs) out << "output " << d << ' ' << p << '\n';
  return out.str();
}

inline RunManifest parse_manifest(const std::string& text) {
  std::istringstream in(text);
  const auto lines = detail::read_lines(in);
  if (lines.empty() || lines[0] != "manifest 1") fail(Errc::parse_error, "missing `manifest 1` header");
  RunManifest m;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    const auto sp = line.find(' ');
    if (sp == std::string::npos) fail(Errc::parse_error, "line " + std::to_string(i + 1) + ": malformed record");
    const std::string tag = line.substr(0, sp);
    const std::string rest = line.substr(sp + 1);
    const auto sp2 = rest.find(' ');
    if (tag == "command") m.command = rest;
    else if (tag == "argv") m.argv.push_back(rest);
    else if (sp2 == std::string::npos) fail(Errc::parse_error, "line " + std::to_string(i + 1) + ": expected two fields");
    else if (tag == "arg") m.arguments.emplace_back(rest.substr(0, sp2), rest.substr(sp2 + 1));
    else if (tag == "input") m.input_digests.emplace_back(rest.substr(sp2 + 1), rest.substr(0, sp2));
    else if (tag == "output") m.outputs.emplace_back(rest.substr(sp2 + 1), rest.substr(0, sp2));
    else fail(Errc::parse_error, "line " + std::to_string(i + 1) + ": unknown record `" + tag + "`");
  }
  return m;
}

}  // namespace onepm
