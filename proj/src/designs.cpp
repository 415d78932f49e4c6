#include "ekr/designs.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "ekr/error.hpp"
#include "ekr/galois_field.hpp"
#include "ekr/parameters.hpp"

namespace ekr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Yields (line number, trimmed content) for each non-comment, non-blank line.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(number, std::string(t));
  }
  return out;
}

std::string keyword_value(const std::pair<int, std::string>& line, std::string_view keyword) {
  const std::string& text = line.second;
  if (text.size() <= keyword.size() || text.compare(0, keyword.size(), keyword) != 0 || text[keyword.size()] != ' ')
    throw ParseError("line " + std::to_string(line.first) + ": expected '" + std::string(keyword) + " <value>'");
  return std::string(trim(std::string_view(text).substr(keyword.size() + 1)));
}

}  // namespace

const BigInt& DesignCertificate::index(int j) const {
  if (j < 0 || j > strength)
    throw DomainError("index lambda_" + std::to_string(j) + " unavailable for strength " + std::to_string(strength));
  return indices[j];
}

DesignCheck is_design(const Semilattice& lattice, std::span<const Element> members, int t, std::uint64_t budget) {
  const int top = lattice.top_rank();
  if (members.empty()) throw DomainError("design must be non-empty");
  if (t < 0 || t > top) throw DomainError("strength " + std::to_string(t) + " outside 0.." + std::to_string(top));
  std::set<Element> seen;
  for (const auto& x : members) {
    if (lattice.rank(x) != top) throw DomainError("design member " + lattice.format(x) + " is not in the top fiber");
    if (!seen.insert(x).second) throw DomainError("duplicate design member " + lattice.format(x));
  }
  const BigInt cost = alpha(lattice.spec(), 0, t) * members.size();
  if (cost > budget)
    throw BudgetExceeded("strength check needs " + cost.str() + " comparisons, budget " + std::to_string(budget));

  DesignCheck result;
  bool first = true;
  for (const auto& z : lattice.enumerate_fiber(t)) {
    std::size_t count = 0;
    for (const auto& x : members)
      if (lattice.leq(z, x)) ++count;
    if (first) {
      result.low = z;
      result.low_count = count;
      first = false;
    } else if (count != result.low_count) {
      result.high = z;
      result.high_count = count;
      return result;
    }
  }
  result.index = BigInt(result.low_count);
  result.low.reset();
  return result;
}

BigInt derive_index(const FamilySpec& spec, const BigInt& lambda_t, int t, int t_prime) {
  if (t_prime < 0 || t_prime > t || t > spec.top_rank())
    throw DomainError("derive_index requires 0 <= t' <= t <= M, got t=" + std::to_string(t) +
                      ", t'=" + std::to_string(t_prime));
  return exact_div(lambda_t * theta(spec, t_prime), theta(spec, t), "derive_index");
}

DesignCertificate certify(const Semilattice& lattice, std::vector<Element> members, int t, std::uint64_t budget) {
  const DesignCheck check = is_design(lattice, members, t, budget);
  if (!check.index) {
    throw VerificationError("not a " + std::to_string(t) + "-design: " + lattice.format(*check.low) + " lies below " +
                            std::to_string(check.low_count) + " members, " + lattice.format(*check.high) +
                            " below " + std::to_string(check.high_count));
  }
  DesignCertificate cert;
  cert.spec = lattice.spec();
  cert.elements = std::move(members);
  cert.strength = t;
  for (int j = 0; j <= t; ++j) cert.indices.push_back(derive_index(cert.spec, *check.index, t, j));
  return cert;
}

Star star(const Semilattice& lattice, std::span<const Element> members, const Element& z) {
  if (lattice.rank(z) > lattice.top_rank()) throw DomainError("star center above top rank");
  Star result{z, {}};
  for (const auto& x : members)
    if (lattice.leq(z, x)) result.members.push_back(x);
  std::sort(result.members.begin(), result.members.end());
  return result;
}

DesignCertificate full_fiber(const Semilattice& lattice, std::uint64_t budget) {
  const auto& spec = lattice.spec();
  const int top = lattice.top_rank();
  const BigInt size = alpha(spec, 0, top);
  if (size > budget)
    throw BudgetExceeded("top fiber has " + size.str() + " elements, budget " + std::to_string(budget));
  DesignCertificate cert;
  cert.spec = spec;
  cert.elements = lattice.enumerate_fiber(top);
  cert.strength = top;
  for (int j = 0; j <= top; ++j) cert.indices.push_back(theta(spec, j));
  return cert;
}

DesignCertificate generate_linear_oa(int q, int m) {
  if (!is_prime(q)) throw DomainError("linear orthogonal array needs a prime q, got " + std::to_string(q));
  if (m < 2) throw DomainError("linear orthogonal array needs m >= 2");
  FamilySpec spec;
  spec.kind = FamilyKind::hamming;
  spec.m = m;
  spec.n = q;
  const Semilattice lattice(spec);

  std::vector<Element> rows;
  std::vector<int> x(m - 1, 0);
  while (true) {
    PartialMap row;
    int sum = 0;
    for (int i = 0; i < m - 1; ++i) {
      row.pairs.emplace_back(i + 1, x[i]);
      sum = (sum + x[i]) % q;
    }
    row.pairs.emplace_back(m, sum);
    rows.push_back({spec, std::move(row)});
    int i = m - 2;
    while (i >= 0 && ++x[i] == q) x[i--] = 0;
    if (i < 0) break;
  }
  std::sort(rows.begin(), rows.end());
  return certify(lattice, std::move(rows), m - 1);
}

DesignCertificate read_design(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.size() < 2) throw ParseError("design file needs 'family' and 'strength' header lines");
  const FamilySpec spec = parse_family(keyword_value(lines[0], "family"));
  const std::string strength_text = keyword_value(lines[1], "strength");
  int t = 0;
  try {
    std::size_t used = 0;
    t = std::stoi(strength_text, &used);
    if (used != strength_text.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(lines[1].first) + ": invalid strength '" + strength_text + "'");
  }
  const Semilattice lattice(spec);
  if (t < 0 || t > lattice.top_rank())
    throw ParseError("line " + std::to_string(lines[1].first) + ": strength " + std::to_string(t) + " out of range");

  std::vector<Element> members;
  std::set<Element> seen;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    Element x;
    try {
      x = lattice.parse(lines[i].second);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lines[i].first) + ": " + e.what());
    }
    if (lattice.rank(x) != lattice.top_rank())
      throw ParseError("line " + std::to_string(lines[i].first) + ": element is not in the top fiber");
    if (!seen.insert(x).second) throw ParseError("line " + std::to_string(lines[i].first) + ": duplicate element");
    members.push_back(std::move(x));
  }
  if (members.empty()) throw ParseError("design file lists no elements");
  return certify(lattice, std::move(members), t);
}

void write_design(const DesignCertificate& cert, std::ostream& out) {
  const Semilattice lattice(cert.spec);
  out << "family " << format_family(cert.spec) << '\n';
  out << "strength " << cert.strength << '\n';
  for (const auto& x : cert.elements) out << lattice.format(x) << '\n';
}

DesignCertificate load_design(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open design file " + path.string());
  return read_design(in);
}

void save_design(const DesignCertificate& cert, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write design file " + path.string());
  write_design(cert, out);
}

std::vector<Element> read_family_file(const Semilattice& lattice, std::istream& in) {
  auto lines = content_lines(in);
  std::size_t start = 0;
  if (!lines.empty() && lines[0].second.rfind("family ", 0) == 0) {
    const FamilySpec spec = parse_family(keyword_value(lines[0], "family"));
    if (spec != lattice.spec())
      throw ParseError("family file is for " + format_family(spec) + ", expected " + format_family(lattice.spec()));
    start = 1;
  }
  std::vector<Element> out;
  for (std::size_t i = start; i < lines.size(); ++i) {
    try {
      out.push_back(lattice.parse(lines[i].second));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lines[i].first) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ekr
