#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace narrow {

// A literal over a 1-based variable index. Encoded as 2*var for the positive
// literal and 2*var+1 for the negative one, so that sorting by code yields the
// canonical order: ascending variable, positive before negative.
class Lit {
public:
  Lit() : code_(0) {}
  static Lit pos(int var) { return Lit(var << 1); }
  static Lit neg(int var) { return Lit((var << 1) | 1); }
  static Lit from_dimacs(int d) { return d > 0 ? pos(d) : neg(-d); }

  int var() const { return code_ >> 1; }
  bool positive() const { return (code_ & 1) == 0; }
  int to_dimacs() const { return positive() ? var() : -var(); }
  Lit negated() const { return Lit(code_ ^ 1); }
  int32_t code() const { return code_; }

  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend bool operator<(Lit a, Lit b) { return a.code_ < b.code_; }

private:
  explicit Lit(int32_t code) : code_(code) {}
  int32_t code_;
};

// A clause held as a duplicate-free literal set in canonical order.
// Tautologies (X and not-X both present) are representable and flagged.
class Clause {
public:
  Clause() = default;
  explicit Clause(std::vector<Lit> lits);
  // Convenience: build from signed DIMACS-style literals.
  static Clause of(std::initializer_list<int> dimacs_lits);

  int width() const { return static_cast<int>(lits_.size()); }
  bool empty() const { return lits_.empty(); }
  bool tautological() const { return tautological_; }
  bool contains(Lit l) const;
  std::span<const Lit> lits() const { return lits_; }
  int max_var() const;
  std::string to_string() const;  // "x1 -x2 x3" style, for diagnostics

  friend bool operator==(const Clause& a, const Clause& b) { return a.lits_ == b.lits_; }
  friend bool operator<(const Clause& a, const Clause& b) { return a.lits_ < b.lits_; }

private:
  std::vector<Lit> lits_;
  bool tautological_ = false;
};

struct ClauseHash {
  size_t operator()(const Clause& c) const {
    size_t h = 1469598103934665603ull;
    for (Lit l : c.lits()) {
      h ^= static_cast<size_t>(l.code());
      h *= 1099511628211ull;
    }
    return h;
  }
};

// A partial map from variables to {0,1}, stored sorted by variable.
class PartialAssignment {
public:
  PartialAssignment() = default;
  static PartialAssignment of(std::initializer_list<std::pair<int, bool>> binds);

  int size() const { return static_cast<int>(bind_.size()); }
  bool empty() const { return bind_.empty(); }
  bool defined(int var) const { return find(var) >= 0; }
  // -1 when unassigned, else 0/1.
  int value(int var) const;
  void set(int var, bool val);  // overwrite allowed
  void erase(int var);

  std::span<const std::pair<int32_t, uint8_t>> bindings() const { return bind_; }
  bool subset_of(const PartialAssignment& other) const;
  // Union of two assignments; throws on conflicting bindings.
  static PartialAssignment merged(const PartialAssignment& a, const PartialAssignment& b);
  PartialAssignment restricted_to_range(int lo_var, int hi_var) const;
  std::string to_string() const;

  friend bool operator==(const PartialAssignment& a, const PartialAssignment& b) {
    return a.bind_ == b.bind_;
  }
  friend bool operator<(const PartialAssignment& a, const PartialAssignment& b) {
    return a.bind_ < b.bind_;
  }

private:
  int find(int var) const;
  std::vector<std::pair<int32_t, uint8_t>> bind_;
};

struct AssignmentHash {
  size_t operator()(const PartialAssignment& p) const {
    size_t h = 1469598103934665603ull;
    for (auto [v, z] : p.bindings()) {
      h ^= (static_cast<size_t>(v) << 1) | z;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct CnfFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;
  // Optional structured names, 1-based; empty when absent.
  std::vector<std::string> names;

  int clause_count() const { return static_cast<int>(clauses.size()); }
  void add(Clause c);
};

// --- core operations ---

// Resolvent of c1 (containing pivot positively) and c2 (containing it
// negatively); may be a tautology. Throws std::invalid_argument when the pivot
// is missing or has the wrong polarity.
Clause resolve(const Clause& c1, const Clause& c2, int pivot_var);

// The maximal clause falsified by p: X->0 contributes X, X->1 contributes -X.
Clause clause_of(const PartialAssignment& p);

// Inverse of clause_of; throws std::invalid_argument on tautologies.
PartialAssignment assignment_of(const Clause& c);

// True iff every literal of c is assigned false by p.
bool falsifies(const PartialAssignment& p, const Clause& c);

// True iff the literal set of c1 is a subset of c2's.
bool subsumes(const Clause& c1, const Clause& c2);

// --- DIMACS I/O ---

class DimacsError : public std::runtime_error {
public:
  DimacsError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

CnfFormula parse_dimacs(const std::string& text);
std::string emit_dimacs(const CnfFormula& f);

// Name-table sidecar: one "<index> <structured-name>" line per variable.
std::string emit_name_table(const CnfFormula& f);
std::vector<std::string> parse_name_table(const std::string& text, int variable_count);

}  // namespace narrow
