#include "rgm/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rgm {

ElemPtr mk_atom(long id) { return std::make_shared<Element>(Element{true, id, {}, nullptr}); }

int cmp_elem(const ElemPtr& a, const ElemPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->atom != b->atom) return a->atom ? -1 : 1;
  if (a->atom) return a->id < b->id ? -1 : (a->id > b->id ? 1 : 0);
  if (int c = cmp_ms(a->src, b->src)) return c;
  return cmp_elem(a->tgt, b->tgt);
}

int cmp_ms(const MultiSet& a, const MultiSet& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; i++)
    if (int c = cmp_elem(a[i], b[i])) return c;
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

bool elem_eq(const ElemPtr& a, const ElemPtr& b) { return cmp_elem(a, b) == 0; }
bool ms_eq(const MultiSet& a, const MultiSet& b) { return cmp_ms(a, b) == 0; }

MultiSet ms_sorted(MultiSet ms) {
  std::sort(ms.begin(), ms.end(), [](const ElemPtr& a, const ElemPtr& b) { return cmp_elem(a, b) < 0; });
  return ms;
}

MultiSet ms_sum(const MultiSet& a, const MultiSet& b) {
  MultiSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return ms_sorted(std::move(out));
}

unsigned long elem_size(const ElemPtr& e) {
  if (e->atom) return 1;
  unsigned long n = elem_size(e->tgt);
  if (e->src.empty()) return n + 1;
  for (const auto& m : e->src) n += elem_size(m);
  return n;
}

long max_atom_id(const ElemPtr& e) {
  if (e->atom) return e->id;
  long m = max_atom_id(e->tgt);
  for (const auto& s : e->src) m = std::max(m, max_atom_id(s));
  return m;
}

ElemPtr range_atom(const ElemPtr& e) { return e->atom ? e : range_atom(e->tgt); }

ElemPtr Model::atom(long id) const {
  if (id < 0 || (!countable && id >= natoms))
    throw std::invalid_argument("model " + name + ": no atom " + std::to_string(id));
  return mk_atom(id);
}

ElemPtr Model::arrow(MultiSet src, ElemPtr tgt) const {
  MultiSet s = ms_sorted(std::move(src));
  for (const auto& eq : eqs)
    if (elem_eq(eq.tgt, tgt) && ms_eq(eq.src, s)) return mk_atom(eq.atom);
  return std::make_shared<Element>(Element{false, 0, std::move(s), std::move(tgt)});
}

ElemPtr Model::canonicalize(const ElemPtr& e) const {
  if (e->atom) return atom(e->id);
  MultiSet src;
  for (const auto& m : e->src) src.push_back(canonicalize(m));
  return arrow(std::move(src), canonicalize(e->tgt));
}

std::optional<std::pair<MultiSet, ElemPtr>> Model::unfold_atom(long id) const {
  for (const auto& eq : eqs)
    if (eq.atom == id) return std::make_pair(eq.src, eq.tgt);
  return std::nullopt;
}

std::optional<std::pair<MultiSet, ElemPtr>> Model::as_arrow(const ElemPtr& e) const {
  if (!e->atom) return std::make_pair(e->src, e->tgt);
  return unfold_atom(e->id);
}

bool Model::is_extensional() const {
  if (countable) return false;
  std::vector<int> hits(natoms, 0);
  for (const auto& eq : eqs) hits[eq.atom]++;
  for (int h : hits)
    if (h != 1) return false;
  return true;
}

long Model::atom_id(const std::string& display) const {
  for (long i = 0; i < (long)atom_names.size(); i++)
    if (atom_names[i] == display) return i;
  return -1;
}

std::string Model::atom_display(long id) const {
  if (id >= 0 && id < (long)atom_names.size()) return atom_names[id];
  return "<" + std::to_string(id) + ">";
}

// ---------- element syntax ----------

namespace {

struct ElemParser {
  const Model& model;
  const std::string& src;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("element '" + src + "': " + msg + " at offset " + std::to_string(pos));
  }

  void ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) pos++;
  }

  bool lit(const std::string& s) {
    ws();
    if (src.compare(pos, s.size(), s) == 0) {
      pos += s.size();
      return true;
    }
    return false;
  }

  ElemPtr atom_tok() {
    ws();
    if (pos < src.size() && src[pos] == '<') {
      size_t close = src.find('>', pos);
      if (close == std::string::npos) fail("unterminated atom number");
      std::string digits = src.substr(pos + 1, close - pos - 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        fail("bad atom number");
      if (!model.atom_names.empty()) fail("numbered atoms not available in model " + model.name);
      pos = close + 1;
      return model.atom(std::stol(digits));
    }
    size_t start = pos;
    while (pos < src.size() &&
           ((src[pos] >= 'a' && src[pos] <= 'z') || (src[pos] >= 'A' && src[pos] <= 'Z') ||
            (src[pos] >= '0' && src[pos] <= '9') || src[pos] == '_' || src[pos] == '*'))
      pos++;
    if (pos == start) fail("expected element");
    std::string w = src.substr(start, pos - start);
    long id = model.atom_id(w);
    if (id < 0) {
      pos = start;
      fail("unknown atom '" + w + "'");
    }
    return mk_atom(id);
  }

  MultiSet mslist() {
    MultiSet ms;
    if (lit("]")) return ms;
    while (true) {
      ms.push_back(elem());
      if (lit("]")) return ms;
      if (!lit(",")) fail("expected ',' or ']'");
    }
  }

  // raw tree; canonicalization happens at the entry point
  ElemPtr elem() {
    ws();
    if (lit("(")) {
      ElemPtr e = elem();
      if (!lit(")")) fail("expected ')'");
      return e;
    }
    if (lit("[")) {
      MultiSet ms = mslist();
      if (!lit("->")) fail("expected '->'");
      ElemPtr t = elem();
      return std::make_shared<Element>(Element{false, 0, ms_sorted(std::move(ms)), std::move(t)});
    }
    return atom_tok();
  }

  ElemPtr top() {
    ElemPtr e = elem();
    ws();
    if (pos != src.size()) fail("trailing input");
    return e;
  }
};

}  // namespace

ElemPtr Model::parse_element(const std::string& text) const {
  ElemParser p{*this, text};
  return canonicalize(p.top());
}

std::string Model::print_element(const ElemPtr& e) const {
  if (e->atom) return atom_display(e->id);
  return print_ms(e->src) + "->" + print_element(e->tgt);
}

std::string Model::print_ms(const MultiSet& ms) const {
  std::string out = "[";
  for (size_t i = 0; i < ms.size(); i++) {
    if (i) out += ",";
    out += print_element(ms[i]);
  }
  return out + "]";
}

// ---------- enumeration ----------

std::vector<ElemPtr> Model::enumerate_elements(unsigned bound) const {
  std::vector<std::vector<ElemPtr>> by_size(bound + 1);
  if (bound >= 1) {
    long natom = countable ? (long)bound : natoms;
    for (long i = 0; i < natom; i++) by_size[1].push_back(mk_atom(i));
  }
  for (unsigned s = 2; s <= bound; s++) {
    std::vector<ElemPtr> pool;  // everything smaller, in canonical order
    for (unsigned t = 1; t < s; t++) pool.insert(pool.end(), by_size[t].begin(), by_size[t].end());
    std::sort(pool.begin(), pool.end(), [](const ElemPtr& a, const ElemPtr& b) { return cmp_elem(a, b) < 0; });

    // nondecreasing picks from pool with exact total leaf size
    std::vector<MultiSet> mss;
    MultiSet cur;
    std::function<void(size_t, unsigned long)> combos = [&](size_t start, unsigned long left) {
      if (left == 0) {
        if (!cur.empty()) mss.push_back(cur);
        return;
      }
      for (size_t i = start; i < pool.size(); i++) {
        unsigned long sz = elem_size(pool[i]);
        if (sz > left) continue;
        cur.push_back(pool[i]);
        combos(i, left - sz);
        cur.pop_back();
      }
    };

    for (unsigned u = 1; u < s; u++) {
      mss.clear();
      if (u == 1) mss.push_back({});
      combos(0, u);
      for (const auto& tgt : by_size[s - u])
        for (const auto& ms : mss) {
          ElemPtr e = arrow(ms, tgt);
          if (!e->atom) by_size[s].push_back(e);
        }
    }
  }
  std::vector<ElemPtr> out;
  for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), [](const ElemPtr& a, const ElemPtr& b) { return cmp_elem(a, b) < 0; });
  return out;
}

// ---------- construction ----------

Model Model::builtin(const std::string& name) {
  Model m;
  m.name = name;
  if (name == "E") {
    m.countable = true;
    return m;
  }
  if (name == "Domega" || name == "Dstar") {
    m.natoms = 1;
    m.atom_names = {"*"};
    Equation eq;
    eq.tgt = mk_atom(0);
    eq.atom = 0;
    if (name == "Dstar") eq.src = {mk_atom(0)};
    m.eqs.push_back(eq);
    return m;
  }
  throw std::invalid_argument("unknown builtin model: " + name);
}

static std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Model Model::from_text(const std::string& text, std::string name) {
  Model m;
  m.name = std::move(name);
  bool have_atoms = false;
  std::vector<std::pair<std::string, std::string>> raw_eqs;  // key text, atom name
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("model " + m.name + " line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    lineno++;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trimmed(line);
    if (line.empty()) continue;
    if (line.rfind("atoms:", 0) == 0) {
      if (have_atoms) fail("duplicate atoms declaration");
      have_atoms = true;
      std::string rest = trimmed(line.substr(6));
      if (!rest.empty() && rest[0] == '{') {
        if (rest.back() != '}') fail("expected '}'");
        std::istringstream names(rest.substr(1, rest.size() - 2));
        std::string w;
        while (std::getline(names, w, ',')) {
          w = trimmed(w);
          if (w.empty() || w == "*" || w.find_first_of("<>[](),:= \t") != std::string::npos)
            fail("bad atom name '" + w + "'");
          if (m.atom_id(w) >= 0) fail("duplicate atom name '" + w + "'");
          m.atom_names.push_back(w);
        }
        m.natoms = (long)m.atom_names.size();
        if (m.natoms == 0) fail("empty atom list");
      } else {
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
          fail("expected a count or {names}");
        m.natoms = std::stol(rest);
        if (m.natoms <= 0) fail("need at least one atom");
      }
      continue;
    }
    if (line.rfind("eq", 0) == 0 && line.size() > 2 && (line[2] == ' ' || line[2] == '\t')) {
      if (!have_atoms) fail("atoms must be declared before equations");
      size_t sep = line.find("==");
      if (sep == std::string::npos) fail("expected '=='");
      raw_eqs.emplace_back(trimmed(line.substr(2, sep - 2)), trimmed(line.substr(sep + 2)));
      continue;
    }
    fail("unrecognized line '" + line + "'");
  }
  if (!have_atoms) throw std::invalid_argument("model " + m.name + ": missing atoms declaration");

  for (auto& [keytext, atomname] : raw_eqs) {
    long id = m.atom_id(atomname);
    if (id < 0 && m.atom_names.empty() && atomname.size() > 2 && atomname.front() == '<' && atomname.back() == '>') {
      std::string digits = atomname.substr(1, atomname.size() - 2);
      if (digits.find_first_not_of("0123456789") == std::string::npos) {
        long v = std::stol(digits);
        if (v >= 0 && v < m.natoms) id = v;
      }
    }
    if (id < 0) throw std::invalid_argument("model " + m.name + ": unknown atom '" + atomname + "'");
    ElemParser p{m, keytext};
    ElemPtr key = p.top();
    if (key->atom) throw std::invalid_argument("model " + m.name + ": equation key must be an arrow");
    m.eqs.push_back(Equation{key->src, key->tgt, id});
  }

  // keys are rewritten through one another until stable
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& eq : m.eqs) {
      MultiSet src;
      for (const auto& e : eq.src) src.push_back(m.canonicalize(e));
      src = ms_sorted(std::move(src));
      ElemPtr tgt = m.canonicalize(eq.tgt);
      if (!ms_eq(src, eq.src) || !elem_eq(tgt, eq.tgt)) {
        eq.src = src;
        eq.tgt = tgt;
        changed = true;
      }
    }
  }
  for (size_t i = 0; i < m.eqs.size(); i++)
    for (size_t j = i + 1; j < m.eqs.size(); j++) {
      if (m.eqs[i].atom == m.eqs[j].atom)
        throw std::invalid_argument("model " + m.name + ": atom '" + m.atom_display(m.eqs[i].atom) +
                                    "' has two defining equations");
      if (ms_eq(m.eqs[i].src, m.eqs[j].src) && elem_eq(m.eqs[i].tgt, m.eqs[j].tgt))
        throw std::invalid_argument("model " + m.name + ": two equations share one key");
    }
  return m;
}

Model Model::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string base = path;
  if (auto slash = base.find_last_of('/'); slash != std::string::npos) base = base.substr(slash + 1);
  if (auto dot = base.find_last_of('.'); dot != std::string::npos) base = base.substr(0, dot);
  return from_text(buf.str(), base);
}

// ---------- environments ----------

const MultiSet& Environment::get(const std::string& x) const {
  static const MultiSet none;
  auto it = bind.find(x);
  return it == bind.end() ? none : it->second;
}

void Environment::add(const std::string& x, const ElemPtr& e) {
  auto& ms = bind[x];
  ms.insert(std::upper_bound(ms.begin(), ms.end(), e,
                             [](const ElemPtr& a, const ElemPtr& b) { return cmp_elem(a, b) < 0; }),
            e);
}

Environment Environment::without(const std::string& x) const {
  Environment g = *this;
  g.bind.erase(x);
  return g;
}

Environment env_sum(const Environment& a, const Environment& b) {
  Environment out = a;
  for (const auto& [x, ms] : b.bind) {
    auto it = out.bind.find(x);
    if (it == out.bind.end())
      out.bind[x] = ms;
    else
      it->second = ms_sum(it->second, ms);
  }
  return out;
}

int cmp_env(const Environment& a, const Environment& b) {
  auto ia = a.bind.begin(), ib = b.bind.begin();
  for (; ia != a.bind.end() && ib != b.bind.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (int c = cmp_ms(ia->second, ib->second)) return c;
  }
  if (ia != a.bind.end()) return 1;
  if (ib != b.bind.end()) return -1;
  return 0;
}

bool env_eq(const Environment& a, const Environment& b) { return cmp_env(a, b) == 0; }

Environment parse_environment(const Model& m, const std::string& text) {
  std::string body = trimmed(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw std::invalid_argument("environment: expected '}'");
    body = trimmed(body.substr(1, body.size() - 2));
  }
  Environment g;
  ElemParser p{m, body};
  p.ws();
  while (p.pos < body.size()) {
    size_t start = p.pos;
    while (p.pos < body.size() && body[p.pos] != ':') p.pos++;
    std::string x = trimmed(body.substr(start, p.pos - start));
    if (x.empty() || !p.lit(":")) {
      p.pos = start;
      p.fail("expected 'name:[...]'");
    }
    if (!p.lit("[")) p.fail("expected '['");
    for (const auto& e : p.mslist()) g.add(x, m.canonicalize(e));
    p.ws();
    if (p.pos < body.size() && !p.lit(",")) p.fail("expected ','");
    p.ws();
  }
  return g;
}

std::string print_environment(const Model& m, const Environment& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, ms] : g.bind) {
    if (!first) out += ", ";
    first = false;
    out += x + ":" + m.print_ms(ms);
  }
  return out + "}";
}

}  // namespace rgm
