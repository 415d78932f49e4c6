#ifndef EKR_TESTS_SUPPORT_HPP
#define EKR_TESTS_SUPPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "ekr/designs.hpp"
#include "ekr/semilattice.hpp"
#include "oracle.hpp"

namespace support {

inline ekr::Semilattice lattice(const std::string& spec) { return ekr::Semilattice(ekr::parse_family(spec)); }

inline std::vector<ekr::Element> all_elements(const ekr::Semilattice& l) {
  std::vector<ekr::Element> out;
  for (int i = 0; i <= l.top_rank(); ++i) {
    auto f = l.enumerate_fiber(i);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

inline ekr::DesignCertificate fano() {
  std::ostringstream text;
  text << "family johnson:v=7,m=3\nstrength 2\n";
  for (const auto& line : oracle::fano_lines()) text << line << "\n";
  std::istringstream in(text.str());
  return ekr::read_design(in);
}

inline ekr::DesignCertificate full(const std::string& spec) { return ekr::full_fiber(lattice(spec)); }

// Small instances of every family, used for exhaustive property checks.
inline const std::vector<std::string>& small_specs() {
  static const std::vector<std::string> specs{
      "johnson:v=5,m=2",   "johnson:v=6,m=3",      "grassmann:v=4,m=2,q=2", "grassmann:v=4,m=2,q=3",
      "hamming:m=2,n=3",   "hamming:m=3,n=3",      "bilinear:m=2,n=2,q=2",  "bilinear:m=2,n=1,q=3",
      "injection:m=3,n=4", "nbjohnson:m=4,n=3,k=2", "signed:m=4,k=2",        "signed:m=3,k=2"};
  return specs;
}

}  // namespace support

#endif  // EKR_TESTS_SUPPORT_HPP
