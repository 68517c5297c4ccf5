#include "novikov/laf.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace novikov {

LafError::LafError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string tag_name(LafTag tag) {
  switch (tag) {
    case LafTag::Lie: return "LAF";
    case LafTag::Product: return "LAF-P";
    case LafTag::Matrix: return "LAF-M";
    case LafTag::Extension: return "LAF-E";
    case LafTag::Lift: return "LAF-L";
    case LafTag::Certificate: return "LAF-C";
  }
  return "";
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
  std::size_t end_column = 1;  // column just past the last character
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view raw = text.substr(start, stop - start);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line;
    line.number = number;
    line.end_column = raw.size() + 1;
    std::size_t p = 0;
    while (p < raw.size()) {
      if (raw[p] == ' ' || raw[p] == '\t') {
        ++p;
        continue;
      }
      std::size_t q = p;
      while (q < raw.size() && raw[q] != ' ' && raw[q] != '\t') ++q;
      line.tokens.push_back({raw.substr(p, q - p), p + 1});
      p = q;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (stop == text.size()) break;
    start = stop + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& message) {
  throw LafError(line.number, tok.column, message);
}

std::size_t parse_count(const Line& line, const Token& tok) {
  const std::string_view s = tok.text;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(line, tok, "expected a non-negative integer, found '" + std::string(s) + "'");
  if (s.size() > 1 && s.front() == '0') fail(line, tok, "integer '" + std::string(s) + "' has leading zeros");
  return value;
}

/// 1-based index in [1, bound], returned 0-based.
std::size_t parse_index(const Line& line, const Token& tok, std::size_t bound) {
  const std::size_t v = parse_count(line, tok);
  if (v == 0 || v > bound)
    fail(line, tok, "index " + std::string(tok.text) + " out of range 1.." + std::to_string(bound));
  return v - 1;
}

Scalar parse_value(const Line& line, const Token& tok) {
  try {
    return parse_scalar(tok.text);
  } catch (const InputError& e) {
    fail(line, tok, e.what());
  }
}

Scalar parse_nonzero(const Line& line, const Token& tok) {
  Scalar v = parse_value(line, tok);
  if (v == 0) fail(line, tok, "zero entries are omitted in canonical form");
  return v;
}

/// Header, body and terminator of one document.
class Body {
public:
  Body(std::string_view text, LafTag expected, std::set<std::string> singles, std::set<std::string> repeated)
      : singles_(std::move(singles)), repeated_(std::move(repeated)) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw LafError(1, 1, "empty document; expected header '" + tag_name(expected) + " 1'");
    const Line& head = lines.front();
    if (head.tokens[0].text != tag_name(expected))
      fail(head, head.tokens[0], "expected header tag '" + tag_name(expected) + "', found '" +
                                     std::string(head.tokens[0].text) + "'");
    if (head.tokens.size() != 2 || head.tokens[1].text != "1")
      throw LafError(head.number, head.tokens.size() > 1 ? head.tokens[1].column : head.end_column,
                     "expected format version 1");
    bool ended = false;
    for (std::size_t l = 1; l < lines.size(); ++l) {
      const Line& line = lines[l];
      if (ended) fail(line, line.tokens[0], "content after 'end'");
      const std::string key(line.tokens[0].text);
      if (key == "end") {
        if (line.tokens.size() != 1) fail(line, line.tokens[1], "'end' takes no arguments");
        ended = true;
        continue;
      }
      if (singles_.count(key)) {
        if (single_.count(key)) fail(line, line.tokens[0], "duplicate '" + key + "' line");
        single_[key] = line;
      } else if (repeated_.count(key)) {
        multi_[key].push_back(line);
      } else {
        fail(line, line.tokens[0], "unknown key '" + key + "' in " + tag_name(expected) + " document");
      }
    }
    if (!ended) {
      const Line& last = lines.back();
      throw LafError(last.number, last.end_column, "missing 'end'");
    }
    last_ = lines.back();
  }

  const Line* find(const std::string& key) const {
    auto it = single_.find(key);
    return it == single_.end() ? nullptr : &it->second;
  }
  const Line& require(const std::string& key) const {
    if (const Line* l = find(key)) return *l;
    throw LafError(last_.number, 1, "missing '" + key + "' line");
  }
  const std::vector<Line>& all(const std::string& key) const {
    static const std::vector<Line> none;
    auto it = multi_.find(key);
    return it == multi_.end() ? none : it->second;
  }

  /// Single "key n" line.
  std::size_t count(const std::string& key) const {
    const Line& l = require(key);
    arity(l, 2);
    return parse_count(l, l.tokens[1]);
  }

  static void arity(const Line& l, std::size_t n) {
    if (l.tokens.size() != n)
      throw LafError(l.number, l.tokens.size() > n ? l.tokens[n].column : l.end_column,
                     "'" + std::string(l.tokens[0].text) + "' expects " + std::to_string(n - 1) + " arguments");
  }

private:
  std::set<std::string> singles_, repeated_;
  std::map<std::string, Line> single_;
  std::map<std::string, std::vector<Line>> multi_;
  Line last_;
};

/// Rejects repeated keys among entry lines.
template <class Key>
void unique(std::set<Key>& seen, const Key& k, const Line& line) {
  if (!seen.insert(k).second) fail(line, line.tokens[0], "duplicate entry");
}

/// "key i j k v" lines into a tensor; antisymmetric entries need i < j.
void read_tensor(const Body& body, const std::string& key, std::size_t n, bool antisymmetric, StructureTensor& t) {
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const Line& l : body.all(key)) {
    Body::arity(l, 5);
    const std::size_t i = parse_index(l, l.tokens[1], n);
    const std::size_t j = parse_index(l, l.tokens[2], n);
    const std::size_t k = parse_index(l, l.tokens[3], n);
    const Scalar v = parse_nonzero(l, l.tokens[4]);
    if (antisymmetric && i >= j)
      fail(l, l.tokens[1], i == j ? "bracket entry with i = j" : "bracket entries are stored with i < j");
    unique(seen, std::make_tuple(i, j, k), l);
    t.set(i, j, k, v);
    if (antisymmetric) t.set(j, i, k, -v);
  }
}

/// "key i r c v" lines into a list of square matrices.
void read_matrices(const Body& body, const std::string& key, std::size_t count, std::size_t size,
                   std::vector<Matrix>& out) {
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const Line& l : body.all(key)) {
    Body::arity(l, 5);
    const std::size_t i = parse_index(l, l.tokens[1], count);
    const std::size_t r = parse_index(l, l.tokens[2], size);
    const std::size_t c = parse_index(l, l.tokens[3], size);
    unique(seen, std::make_tuple(i, r, c), l);
    out[i](r, c) = parse_nonzero(l, l.tokens[4]);
  }
}

SparseVec read_sparse(const Body& body, const std::string& key, std::size_t bound) {
  std::map<std::size_t, Scalar> values;
  for (const Line& l : body.all(key)) {
    Body::arity(l, 3);
    const std::size_t i = parse_index(l, l.tokens[1], bound);
    if (values.count(i)) fail(l, l.tokens[0], "duplicate entry");
    values[i] = parse_nonzero(l, l.tokens[2]);
  }
  SparseVec v;
  for (auto& [i, x] : values) v.push_back({i, x});
  return v;
}

void write_tensor(std::ostream& os, const std::string& key, const StructureTensor& t, bool antisymmetric) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = antisymmetric ? i + 1 : 0; j < n; ++j)
      for (const auto& e : t.cell(i, j))
        os << key << ' ' << i + 1 << ' ' << j + 1 << ' ' << e.index + 1 << ' ' << to_string(e.value) << '\n';
}

void write_matrices(std::ostream& os, const std::string& key, const std::vector<Matrix>& ms) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t r = 0; r < ms[i].rows(); ++r)
      for (std::size_t c = 0; c < ms[i].cols(); ++c)
        if (ms[i](r, c) != 0)
          os << key << ' ' << i + 1 << ' ' << r + 1 << ' ' << c + 1 << ' ' << to_string(ms[i](r, c)) << '\n';
}

void write_sparse(std::ostream& os, const std::string& key, const SparseVec& v) {
  for (const auto& e : v) os << key << ' ' << e.index + 1 << ' ' << to_string(e.value) << '\n';
}

bool valid_label(std::string_view s) {
  for (char ch : s)
    if (static_cast<unsigned char>(ch) <= ' ' || ch == '#') return false;
  return !s.empty();
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string witness_name(Certificate::Witness w) {
  switch (w) {
    case Certificate::Witness::None: return "none";
    case Certificate::Witness::LinearCombination: return "linear-combination";
    case Certificate::Witness::ConstantResidual: return "constant-residual";
  }
  return "";
}

}  // namespace

LafTag detect_tag(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw LafError(1, 1, "empty document");
  const Line& head = lines.front();
  for (LafTag t : {LafTag::Lie, LafTag::Product, LafTag::Matrix, LafTag::Extension, LafTag::Lift, LafTag::Certificate})
    if (head.tokens[0].text == tag_name(t)) return t;
  fail(head, head.tokens[0], "unknown format tag '" + std::string(head.tokens[0].text) + "'");
}

LieDocument parse_lie_document(std::string_view text) {
  Body body(text, LafTag::Lie, {"dim", "labels"}, {"bracket"});
  const std::size_t n = body.count("dim");
  LieDocument doc;
  doc.bracket = StructureTensor(n);
  if (const Line* l = body.find("labels")) {
    Body::arity(*l, n + 1);
    std::set<std::string_view> seen;
    for (std::size_t i = 1; i <= n; ++i) {
      const Token& tok = l->tokens[i];
      if (!valid_label(tok.text)) fail(*l, tok, "invalid label");
      if (!seen.insert(tok.text).second) fail(*l, tok, "duplicate label '" + std::string(tok.text) + "'");
      doc.labels.emplace_back(tok.text);
    }
  } else {
    doc.labels = default_labels(n);
  }
  read_tensor(body, "bracket", n, true, doc.bracket);
  return doc;
}

LieAlgebra parse_lie(std::string_view text) {
  LieDocument doc = parse_lie_document(text);
  return validate_lie(std::move(doc.bracket), std::move(doc.labels));
}

AlgebraProduct parse_product(std::string_view text) {
  Body body(text, LafTag::Product, {"dim"}, {"product"});
  StructureTensor t(body.count("dim"));
  read_tensor(body, "product", t.dim(), false, t);
  return AlgebraProduct(std::move(t));
}

Matrix parse_matrix(std::string_view text) {
  Body body(text, LafTag::Matrix, {"rows", "cols"}, {"entry"});
  Matrix m(body.count("rows"), body.count("cols"));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Line& l : body.all("entry")) {
    Body::arity(l, 4);
    const std::size_t r = parse_index(l, l.tokens[1], m.rows());
    const std::size_t c = parse_index(l, l.tokens[2], m.cols());
    unique(seen, std::make_pair(r, c), l);
    m(r, c) = parse_nonzero(l, l.tokens[3]);
  }
  return m;
}

ExtensionData parse_extension(std::string_view text) {
  Body body(text, LafTag::Extension, {"dim-a", "dim-b"}, {"b-bracket", "b-product", "a-product", "phi", "omega"});
  const std::size_t n = body.count("dim-a");
  const std::size_t m = body.count("dim-b");
  ExtensionData ext(n, m);
  read_tensor(body, "b-bracket", m, true, ext.b_bracket);
  read_tensor(body, "b-product", m, false, ext.b_product.tensor());
  read_tensor(body, "a-product", n, false, ext.a_product.tensor());
  read_matrices(body, "phi", m, n, ext.phi);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const Line& l : body.all("omega")) {
    Body::arity(l, 5);
    const std::size_t i = parse_index(l, l.tokens[1], m);
    const std::size_t j = parse_index(l, l.tokens[2], m);
    const std::size_t r = parse_index(l, l.tokens[3], n);
    if (i >= j) fail(l, l.tokens[1], i == j ? "cocycle entry with i = j" : "cocycle entries are stored with i < j");
    unique(seen, std::make_tuple(i, j, r), l);
    const Scalar v = parse_nonzero(l, l.tokens[4]);
    ext.omega[i * m + j][r] = v;
    ext.omega[j * m + i][r] = -v;
  }
  return ext;
}

LiftData parse_lift(std::string_view text) {
  Body body(text, LafTag::Lift, {"dim-a", "dim-b"}, {"X", "Y", "omega"});
  const std::size_t n = body.count("dim-a");
  const std::size_t m = body.count("dim-b");
  LiftData lift(n, m);
  read_matrices(body, "X", m, n, lift.X);
  read_matrices(body, "Y", m, n, lift.Y);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const Line& l : body.all("omega")) {
    Body::arity(l, 5);
    const std::size_t i = parse_index(l, l.tokens[1], m);
    const std::size_t j = parse_index(l, l.tokens[2], m);
    const std::size_t r = parse_index(l, l.tokens[3], n);
    unique(seen, std::make_tuple(i, j, r), l);
    lift.omega(i, j)[r] = parse_nonzero(l, l.tokens[4]);
  }
  return lift;
}

Certificate parse_certificate(std::string_view text) {
  Body body(text, LafTag::Certificate,
            {"dim", "hash", "verdict", "method", "witness", "steps", "residuals", "constant"},
            {"product", "linear", "free", "particular", "direction", "combination"});
  Certificate c;
  c.dim = body.count("dim");
  const std::size_t n = c.dim;
  const std::size_t nvars = n * n * n;

  const Line& h = body.require("hash");
  Body::arity(h, 2);
  const std::string_view hx = h.tokens[1].text;
  if (hx.size() != 16 || hx.find_first_not_of("0123456789abcdef") != std::string_view::npos)
    fail(h, h.tokens[1], "hash must be 16 lowercase hexadecimal digits");
  std::from_chars(hx.data(), hx.data() + hx.size(), c.algebra_hash, 16);

  const Line& v = body.require("verdict");
  Body::arity(v, 2);
  if (v.tokens[1].text == "Exists") c.verdict = Certificate::Verdict::Exists;
  else if (v.tokens[1].text == "NotExists") c.verdict = Certificate::Verdict::NotExists;
  else if (v.tokens[1].text == "Undetermined") c.verdict = Certificate::Verdict::Undetermined;
  else fail(v, v.tokens[1], "verdict must be Exists, NotExists or Undetermined");

  const Line& me = body.require("method");
  Body::arity(me, 2);
  c.method = std::string(me.tokens[1].text);

  const Line& w = body.require("witness");
  Body::arity(w, 2);
  if (w.tokens[1].text == "none") c.witness = Certificate::Witness::None;
  else if (w.tokens[1].text == "linear-combination") c.witness = Certificate::Witness::LinearCombination;
  else if (w.tokens[1].text == "constant-residual") c.witness = Certificate::Witness::ConstantResidual;
  else fail(w, w.tokens[1], "witness must be none, linear-combination or constant-residual");

  c.steps = body.count("steps");
  c.residuals = body.count("residuals");
  if (const Line* k = body.find("constant")) {
    Body::arity(*k, 2);
    c.constant = parse_value(*k, k->tokens[1]);
  }

  c.product = AlgebraProduct(n);
  read_tensor(body, "product", n, false, c.product.tensor());
  c.linear_combination = read_sparse(body, "linear", std::numeric_limits<std::size_t>::max());
  c.combination = read_sparse(body, "combination", std::numeric_limits<std::size_t>::max());
  c.param.particular = read_sparse(body, "particular", nvars);

  std::set<std::size_t> free_seen;
  for (const Line& l : body.all("free")) {
    Body::arity(l, 2);
    const std::size_t f = parse_index(l, l.tokens[1], nvars);
    if (!free_seen.insert(f).second) fail(l, l.tokens[1], "duplicate free variable");
    c.param.free.push_back(f);
  }
  std::vector<std::map<std::size_t, Scalar>> dirs(c.param.free.size());
  for (const Line& l : body.all("direction")) {
    Body::arity(l, 4);
    const std::size_t f = parse_index(l, l.tokens[1], c.param.free.size());
    const std::size_t x = parse_index(l, l.tokens[2], nvars);
    if (dirs[f].count(x)) fail(l, l.tokens[0], "duplicate entry");
    dirs[f][x] = parse_nonzero(l, l.tokens[3]);
  }
  for (auto& d : dirs) {
    SparseVec s;
    for (auto& [x, val] : d) s.push_back({x, val});
    c.param.directions.push_back(std::move(s));
  }
  return c;
}

std::string emit_lie(const LieDocument& doc) {
  std::ostringstream os;
  os << "LAF 1\ndim " << doc.bracket.dim() << '\n';
  if (doc.bracket.dim() > 0) {
    os << "labels";
    for (const auto& l : doc.labels) os << ' ' << l;
    os << '\n';
  }
  write_tensor(os, "bracket", doc.bracket, true);
  os << "end\n";
  return os.str();
}

std::string emit_lie(const LieAlgebra& g) { return emit_lie(LieDocument{g.labels(), g.structure()}); }

std::string emit_product(const AlgebraProduct& p) {
  std::ostringstream os;
  os << "LAF-P 1\ndim " << p.dim() << '\n';
  write_tensor(os, "product", p.tensor(), false);
  os << "end\n";
  return os.str();
}

std::string emit_matrix(const Matrix& m) {
  std::ostringstream os;
  os << "LAF-M 1\nrows " << m.rows() << "\ncols " << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) os << "entry " << r + 1 << ' ' << c + 1 << ' ' << to_string(m(r, c)) << '\n';
  os << "end\n";
  return os.str();
}

std::string emit_extension(const ExtensionData& ext) {
  std::ostringstream os;
  os << "LAF-E 1\ndim-a " << ext.dim_a << "\ndim-b " << ext.dim_b << '\n';
  write_tensor(os, "b-bracket", ext.b_bracket, true);
  write_tensor(os, "b-product", ext.b_product.tensor(), false);
  write_tensor(os, "a-product", ext.a_product.tensor(), false);
  write_matrices(os, "phi", ext.phi);
  for (std::size_t i = 0; i < ext.dim_b; ++i)
    for (std::size_t j = i + 1; j < ext.dim_b; ++j)
      for (std::size_t r = 0; r < ext.dim_a; ++r)
        if (ext.Omega(i, j)[r] != 0)
          os << "omega " << i + 1 << ' ' << j + 1 << ' ' << r + 1 << ' ' << to_string(ext.Omega(i, j)[r]) << '\n';
  os << "end\n";
  return os.str();
}

std::string emit_lift(const LiftData& lift, std::size_t dim_a) {
  const std::size_t m = lift.dim_b();
  std::ostringstream os;
  os << "LAF-L 1\ndim-a " << dim_a << "\ndim-b " << m << '\n';
  write_matrices(os, "X", lift.X);
  write_matrices(os, "Y", lift.Y);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < dim_a; ++r)
        if (lift.omega(i, j)[r] != 0)
          os << "omega " << i + 1 << ' ' << j + 1 << ' ' << r + 1 << ' ' << to_string(lift.omega(i, j)[r]) << '\n';
  os << "end\n";
  return os.str();
}

std::string emit_certificate(const Certificate& c) {
  std::ostringstream os;
  os << "LAF-C 1\ndim " << c.dim << "\nhash " << hex64(c.algebra_hash) << "\nverdict " << to_string(c.verdict)
     << "\nmethod " << (c.method.empty() ? "none" : c.method) << "\nwitness " << witness_name(c.witness)
     << "\nsteps " << c.steps << "\nresiduals " << c.residuals << '\n';
  if (c.witness == Certificate::Witness::ConstantResidual) os << "constant " << to_string(c.constant) << '\n';
  if (c.verdict == Certificate::Verdict::Exists) write_tensor(os, "product", c.product.tensor(), false);
  write_sparse(os, "linear", c.linear_combination);
  for (std::size_t f : c.param.free) os << "free " << f + 1 << '\n';
  write_sparse(os, "particular", c.param.particular);
  for (std::size_t f = 0; f < c.param.directions.size(); ++f)
    for (const auto& e : c.param.directions[f])
      os << "direction " << f + 1 << ' ' << e.index + 1 << ' ' << to_string(e.value) << '\n';
  write_sparse(os, "combination", c.combination);
  os << "end\n";
  return os.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw InputError("cannot write '" + path + "'");
}

}  // namespace novikov
