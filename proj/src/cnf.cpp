#include "narrow/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace narrow {

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  for (size_t i = 0; i + 1 < lits_.size(); ++i) {
    if (lits_[i].var() == lits_[i + 1].var()) {
      tautological_ = true;
      break;
    }
  }
}

Clause Clause::of(std::initializer_list<int> dimacs_lits) {
  std::vector<Lit> ls;
  ls.reserve(dimacs_lits.size());
  for (int d : dimacs_lits) ls.push_back(Lit::from_dimacs(d));
  return Clause(std::move(ls));
}

bool Clause::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

int Clause::max_var() const {
  return lits_.empty() ? 0 : lits_.back().var();
}

std::string Clause::to_string() const {
  std::string s;
  for (Lit l : lits_) {
    if (!s.empty()) s += ' ';
    if (!l.positive()) s += '-';
    s += 'x';
    s += std::to_string(l.var());
  }
  return s.empty() ? "<empty>" : s;
}

PartialAssignment PartialAssignment::of(std::initializer_list<std::pair<int, bool>> binds) {
  PartialAssignment p;
  for (auto [v, z] : binds) p.set(v, z);
  return p;
}

int PartialAssignment::find(int var) const {
  auto it = std::lower_bound(bind_.begin(), bind_.end(), var,
                             [](const auto& a, int v) { return a.first < v; });
  if (it == bind_.end() || it->first != var) return -1;
  return static_cast<int>(it - bind_.begin());
}

int PartialAssignment::value(int var) const {
  int i = find(var);
  return i < 0 ? -1 : bind_[i].second;
}

void PartialAssignment::set(int var, bool val) {
  auto it = std::lower_bound(bind_.begin(), bind_.end(), var,
                             [](const auto& a, int v) { return a.first < v; });
  if (it != bind_.end() && it->first == var) {
    it->second = val ? 1 : 0;
  } else {
    bind_.insert(it, {var, val ? uint8_t(1) : uint8_t(0)});
  }
}

void PartialAssignment::erase(int var) {
  int i = find(var);
  if (i >= 0) bind_.erase(bind_.begin() + i);
}

bool PartialAssignment::subset_of(const PartialAssignment& other) const {
  for (auto [v, z] : bind_) {
    if (other.value(v) != z) return false;
  }
  return true;
}

PartialAssignment PartialAssignment::merged(const PartialAssignment& a,
                                            const PartialAssignment& b) {
  PartialAssignment r = a;
  for (auto [v, z] : b.bind_) {
    int cur = r.value(v);
    if (cur >= 0 && cur != z) throw std::invalid_argument("conflicting bindings in merge");
    r.set(v, z != 0);
  }
  return r;
}

PartialAssignment PartialAssignment::restricted_to_range(int lo_var, int hi_var) const {
  PartialAssignment r;
  for (auto [v, z] : bind_) {
    if (v >= lo_var && v <= hi_var) r.bind_.push_back({v, z});
  }
  return r;
}

std::string PartialAssignment::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto [v, z] : bind_) {
    if (!first) s += ", ";
    first = false;
    s += 'x';
    s += std::to_string(v);
    s += "->";
    s += z ? '1' : '0';
  }
  return s + "}";
}

void CnfFormula::add(Clause c) {
  variable_count = std::max(variable_count, c.max_var());
  clauses.push_back(std::move(c));
}

Clause resolve(const Clause& c1, const Clause& c2, int pivot_var) {
  if (!c1.contains(Lit::pos(pivot_var)))
    throw std::invalid_argument("resolve: first clause lacks positive pivot x" +
                                std::to_string(pivot_var));
  if (!c2.contains(Lit::neg(pivot_var)))
    throw std::invalid_argument("resolve: second clause lacks negative pivot x" +
                                std::to_string(pivot_var));
  std::vector<Lit> lits;
  lits.reserve(c1.width() + c2.width() - 2);
  for (Lit l : c1.lits())
    if (l.var() != pivot_var) lits.push_back(l);
  for (Lit l : c2.lits())
    if (l.var() != pivot_var) lits.push_back(l);
  return Clause(std::move(lits));
}

Clause clause_of(const PartialAssignment& p) {
  std::vector<Lit> lits;
  lits.reserve(p.size());
  for (auto [v, z] : p.bindings()) lits.push_back(z ? Lit::neg(v) : Lit::pos(v));
  return Clause(std::move(lits));
}

PartialAssignment assignment_of(const Clause& c) {
  if (c.tautological()) throw std::invalid_argument("assignment_of: tautological clause");
  PartialAssignment p;
  for (Lit l : c.lits()) p.set(l.var(), !l.positive());
  return p;
}

bool falsifies(const PartialAssignment& p, const Clause& c) {
  for (Lit l : c.lits()) {
    int z = p.value(l.var());
    if (z < 0) return false;
    if (l.positive() ? z == 1 : z == 0) return false;
  }
  return true;
}

bool subsumes(const Clause& c1, const Clause& c2) {
  if (c1.width() > c2.width()) return false;
  auto a = c1.lits();
  auto b = c2.lits();
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      return false;
    }
  }
  return i == a.size();
}

namespace {

struct LineReader {
  const std::string& text;
  size_t pos = 0;
  int line = 0;

  bool next(std::string& out) {
    if (pos >= text.size()) return false;
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      out = text.substr(pos);
      pos = text.size();
    } else {
      out = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    ++line;
    return true;
  }
};

bool parse_int(const std::string& tok, long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) toks.push_back(s.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  LineReader rd{text};
  std::string line;
  long declared_vars = -1, declared_clauses = -1;
  CnfFormula f;
  std::vector<Lit> cur;
  bool open_clause = false;
  int open_line = 0;

  while (rd.next(line)) {
    if (!line.empty() && line[0] == 'c') continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (declared_vars < 0) {
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cnf" ||
          !parse_int(toks[2], declared_vars) || !parse_int(toks[3], declared_clauses) ||
          declared_vars < 0 || declared_clauses < 0)
        throw DimacsError(rd.line, "malformed header (expected 'p cnf <vars> <clauses>')");
      continue;
    }
    for (const auto& tok : toks) {
      long v;
      if (!parse_int(tok, v)) throw DimacsError(rd.line, "not an integer: '" + tok + "'");
      if (v == 0) {
        if (cur.empty())
          throw DimacsError(rd.line, "empty clause not allowed in DIMACS input");
        f.clauses.push_back(Clause(std::move(cur)));
        cur.clear();
        open_clause = false;
      } else {
        long av = v < 0 ? -v : v;
        if (av > declared_vars)
          throw DimacsError(rd.line, "literal out of range: " + std::to_string(v));
        if (!open_clause) {
          open_clause = true;
          open_line = rd.line;
        }
        cur.push_back(Lit::from_dimacs(static_cast<int>(v)));
      }
    }
  }
  if (declared_vars < 0) throw DimacsError(rd.line, "missing 'p cnf' header");
  if (open_clause)
    throw DimacsError(open_line, "clause without terminating 0");
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    throw DimacsError(rd.line, "clause count mismatch: header says " +
                                   std::to_string(declared_clauses) + ", found " +
                                   std::to_string(f.clauses.size()));
  f.variable_count = static_cast<int>(declared_vars);
  return f;
}

std::string emit_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.variable_count) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const Clause& c : f.clauses) {
    for (Lit l : c.lits()) {
      out += std::to_string(l.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

std::string emit_name_table(const CnfFormula& f) {
  std::string out;
  for (int v = 1; v <= f.variable_count; ++v) {
    out += std::to_string(v);
    out += ' ';
    out += (v < static_cast<int>(f.names.size()) && !f.names[v].empty()) ? f.names[v]
                                                                         : ("v" + std::to_string(v));
    out += '\n';
  }
  return out;
}

std::vector<std::string> parse_name_table(const std::string& text, int variable_count) {
  std::vector<std::string> names(variable_count + 1);
  LineReader rd{text};
  std::string line;
  while (rd.next(line)) {
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    long idx;
    if (toks.size() != 2 || !parse_int(toks[0], idx) || idx < 1 || idx > variable_count)
      throw DimacsError(rd.line, "malformed name-table line");
    names[idx] = toks[1];
  }
  return names;
}

}  // namespace narrow
