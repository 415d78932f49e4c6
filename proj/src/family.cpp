#include "ekr/family.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <vector>

#include "ekr/error.hpp"
#include "ekr/galois_field.hpp"

namespace ekr {

namespace {

struct KindInfo {
  FamilyKind kind;
  std::string_view name;
  std::vector<char> keys;
};

const std::vector<KindInfo>& kinds() {
  static const std::vector<KindInfo> table = {
      {FamilyKind::johnson, "johnson", {'v', 'm'}},
      {FamilyKind::grassmann, "grassmann", {'v', 'm', 'q'}},
      {FamilyKind::hamming, "hamming", {'m', 'n'}},
      {FamilyKind::bilinear, "bilinear", {'m', 'n', 'q'}},
      {FamilyKind::injection, "injection", {'m', 'n'}},
      {FamilyKind::nbjohnson, "nbjohnson", {'m', 'n', 'k'}},
      {FamilyKind::signed_sets, "signed", {'m', 'k'}},
  };
  return table;
}

const KindInfo& info(FamilyKind kind) {
  for (const auto& entry : kinds())
    if (entry.kind == kind) return entry;
  throw DomainError("unknown family kind");
}

int& field(FamilySpec& spec, char key) {
  switch (key) {
    case 'v': return spec.v;
    case 'm': return spec.m;
    case 'n': return spec.n;
    case 'q': return spec.q;
    default: return spec.k;
  }
}

int field(const FamilySpec& spec, char key) {
  switch (key) {
    case 'v': return spec.v;
    case 'm': return spec.m;
    case 'n': return spec.n;
    case 'q': return spec.q;
    default: return spec.k;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(FamilyKind kind) { return info(kind).name; }

void validate(const FamilySpec& spec) {
  auto fail = [&](const std::string& why) { throw DomainError(std::string(to_string(spec.kind)) + ": " + why); };
  switch (spec.kind) {
    case FamilyKind::johnson:
    case FamilyKind::grassmann:
      if (spec.m < 1 || spec.v < 2 * spec.m) fail("requires v >= 2m >= 2");
      break;
    case FamilyKind::hamming:
      if (spec.m < 1 || spec.n < 2) fail("requires m >= 1, n >= 2");
      break;
    case FamilyKind::bilinear:
      if (spec.m < 1 || spec.n < 1) fail("requires m, n >= 1");
      break;
    case FamilyKind::injection:
      if (spec.m < 1 || spec.n < spec.m) fail("requires n >= m >= 1");
      break;
    case FamilyKind::nbjohnson:
      if (spec.n < 2) fail("requires n >= 2");
      [[fallthrough]];
    case FamilyKind::signed_sets:
      if (spec.k < 1 || spec.k >= spec.m) fail("requires 1 <= k < m");
      break;
  }
  if (spec.kind == FamilyKind::grassmann || spec.kind == FamilyKind::bilinear) {
    int p = 0, e = 0;
    if (!prime_power(spec.q, p, e)) fail("q must be a prime power");
  }
}

FamilySpec parse_family(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec missing ':' in '" + std::string(text) + "'");
  const auto name = text.substr(0, colon);
  const KindInfo* kind = nullptr;
  for (const auto& entry : kinds())
    if (entry.name == name) kind = &entry;
  if (kind == nullptr) throw ParseError("unknown family kind '" + std::string(name) + "'");

  FamilySpec spec;
  spec.kind = kind->kind;
  std::map<char, bool> seen;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq != 1) throw ParseError("malformed parameter '" + std::string(item) + "'");
    const char key = item[0];
    if (std::find(kind->keys.begin(), kind->keys.end(), key) == kind->keys.end())
      throw ParseError("parameter '" + std::string(1, key) + "' not used by " + std::string(name));
    if (seen[key]) throw ParseError("duplicate parameter '" + std::string(1, key) + "'");
    seen[key] = true;
    const auto digits = item.substr(2);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw ParseError("parameter '" + std::string(item) + "' is not an integer");
    field(spec, key) = value;
  }
  for (char key : kind->keys)
    if (!seen[key]) throw ParseError("missing parameter '" + std::string(1, key) + "' for " + std::string(name));
  validate(spec);
  return spec;
}

std::string format_family(const FamilySpec& spec) {
  const auto& entry = info(spec.kind);
  std::string out(entry.name);
  out += ':';
  bool first = true;
  for (char key : entry.keys) {
    if (!first) out += ',';
    first = false;
    out += key;
    out += '=';
    out += std::to_string(field(spec, key));
  }
  return out;
}

}  // namespace ekr
