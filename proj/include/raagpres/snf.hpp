#ifndef RAAGPRES_SNF_HPP
#define RAAGPRES_SNF_HPP

#include <vector>
#include <boost/multiprecision/cpp_int.hpp>

namespace raagpres {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Smith normal form of an integer matrix: U*m*V = D with U, V unimodular
/// and D diagonal with a divisibility chain d1 | d2 | ... . The transforms
/// are re-multiplied against the input before returning; a failed check is
/// a logic error, not a result.
struct SnfResult {
  std::vector<BigInt> diagonal;  // min(rows, cols) entries, non-negative
  int rank = 0;                  // number of non-zero diagonal entries
  IntMatrix u;                   // rows x rows
  IntMatrix v;                   // cols x cols
};

SnfResult smith_normal_form(const IntMatrix& m);

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace raagpres

#endif
