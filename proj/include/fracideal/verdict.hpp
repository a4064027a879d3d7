#pragma once

// Three-valued outcomes for universally quantified checks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace fracideal {

enum class Status { Holds, Refuted, Undetermined };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "Holds";
    case Status::Refuted:
      return "Refuted";
    case Status::Undetermined:
      return "Undetermined";
  }
  return "?";
}

/// How a Holds verdict was reached.
enum class Basis { None, Exhaustive, Oracle };

inline const char* to_string(Basis b) {
  switch (b) {
    case Basis::None:
      return "none";
    case Basis::Exhaustive:
      return "exhaustive";
    case Basis::Oracle:
      return "oracle";
  }
  return "?";
}

struct SearchBound {
  std::int64_t height = 0;   // element / coefficient cap
  std::size_t checked = 0;   // candidates actually evaluated
  bool complete = false;     // the candidate set covers every case up to symmetry
};

/// The data exhibiting a failed equality lhs = rhs.  The *_expr fields are
/// expressions in the ideal-expression language and re-evaluate to lhs/rhs.
struct WitnessReport {
  std::string kind;
  std::vector<std::string> elements;
  std::string lhs_expr, rhs_expr;
  std::string lhs, rhs;
  std::string note;
  // Position in the search order; smaller is preferred when merging.
  std::vector<std::int64_t> order_key;
};

struct Verdict {
  Status status = Status::Undetermined;
  SearchBound bound;
  Basis basis = Basis::None;
  std::string oracle;  // name of the theory oracle when basis == Oracle
  std::optional<WitnessReport> witness;
  std::string detail;

  static Verdict holds(SearchBound b, Basis basis, std::string oracle = {}) {
    Verdict v;
    v.status = Status::Holds;
    v.bound = b;
    v.basis = basis;
    v.oracle = std::move(oracle);
    return v;
  }
  static Verdict refuted(SearchBound b, WitnessReport w) {
    Verdict v;
    v.status = Status::Refuted;
    v.bound = b;
    v.witness = std::move(w);
    return v;
  }
  static Verdict undetermined(SearchBound b, std::string detail = {}) {
    Verdict v;
    v.status = Status::Undetermined;
    v.bound = b;
    v.detail = std::move(detail);
    return v;
  }

  bool is_holds() const { return status == Status::Holds; }
  bool is_refuted() const { return status == Status::Refuted; }
};

inline int preference(Status s) {
  switch (s) {
    case Status::Refuted:
      return 0;
    case Status::Holds:
      return 1;
    case Status::Undetermined:
      return 2;
  }
  return 3;
}

/// Associative merge of partial verdicts over disjoint candidate ranges:
/// Refuted beats Holds beats Undetermined, and among Refuted verdicts the
/// witness earliest in the search order wins.  Checked counts add up.
inline Verdict merge(const Verdict& x, const Verdict& y) {
  Verdict out;
  if (preference(x.status) != preference(y.status))
    out = preference(x.status) < preference(y.status) ? x : y;
  else if (x.is_refuted())
    out = (y.witness->order_key < x.witness->order_key) ? y : x;
  else
    out = x;
  out.bound.checked = x.bound.checked + y.bound.checked;
  out.bound.height = std::max(x.bound.height, y.bound.height);
  out.bound.complete = x.bound.complete && y.bound.complete;
  return out;
}

/// Raised when two computations that must agree mathematically do not.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

/// A sweep contradicts the theory oracle.
class OracleMismatch : public std::logic_error {
 public:
  explicit OracleMismatch(const std::string& what) : std::logic_error(what) {}
};

class NotFound : public std::runtime_error {
 public:
  explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedBackend : public std::invalid_argument {
 public:
  explicit UnsupportedBackend(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fracideal
