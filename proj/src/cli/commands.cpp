#include "gca/cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "gca/affine.hpp"
#include "gca/errors.hpp"
#include "gca/matroids.hpp"

namespace gca::cli {

namespace {

using whitney::TensorValue;

const Extensor& as_extensor(const Value& v, const char* context) {
  if (const auto* e = std::get_if<Extensor>(&v)) return *e;
  throw MathError(std::string(context) + " needs an extensor operand");
}

TensorValue as_tensor(const Value& v) {
  if (const auto* e = std::get_if<Extensor>(&v)) return TensorValue::outer({*e});
  if (const auto* t = std::get_if<TensorValue>(&v)) return *t;
  throw MathError("'#' cannot take a flag operand");
}

std::optional<Scalar> scalar_of(const Value& v) {
  const auto* e = std::get_if<Extensor>(&v);
  if (e && e->step() == 0) return e->scalar_value();
  return std::nullopt;
}

Value scale_value(const Scalar& s, const Value& v) {
  if (const auto* e = std::get_if<Extensor>(&v)) return scale(s, *e);
  if (const auto* t = std::get_if<TensorValue>(&v)) return s * *t;
  std::vector<Extensor> levels = std::get<FlagValue>(v).levels();
  levels.front() = scale(s, levels.front());
  return FlagValue::from_levels(std::move(levels));
}

Value add_values(const Value& a, const Value& b, bool subtract) {
  if (std::holds_alternative<FlagValue>(a) || std::holds_alternative<FlagValue>(b)) {
    throw MathError("flags cannot be added");
  }
  if (std::holds_alternative<Extensor>(a) && std::holds_alternative<Extensor>(b)) {
    const auto& x = std::get<Extensor>(a);
    const auto& y = std::get<Extensor>(b);
    if (x.step() != y.step()) {
      throw MathError("cannot add tensors of steps " + std::to_string(x.step()) + " and " +
                      std::to_string(y.step()));
    }
    return subtract ? x - y : x + y;
  }
  if (std::holds_alternative<TensorValue>(a) && std::holds_alternative<TensorValue>(b)) {
    const auto& x = std::get<TensorValue>(a);
    const auto& y = std::get<TensorValue>(b);
    return subtract ? x - y : x + y;
  }
  throw MathError("cannot add an extensor and a tensor");
}

Value regressive(const Value& a, const Value& b) {
  if (std::holds_alternative<TensorValue>(a) || std::holds_alternative<TensorValue>(b)) {
    throw MathError("regressive product of a tensor");
  }
  const auto* ea = std::get_if<Extensor>(&a);
  const auto* eb = std::get_if<Extensor>(&b);
  if (ea && eb) return regressive_product(*ea, *eb);
  if (ea) return multiply_into_flag(*ea, std::get<FlagValue>(b));
  if (eb) return multiply_into_flag(*eb, std::get<FlagValue>(a));
  return flag_product(std::get<FlagValue>(a), std::get<FlagValue>(b));
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Splits at top-level commas when there are any, otherwise at top-level
// whitespace.
std::vector<std::string> split_arguments(std::string_view s) {
  int depth = 0;
  bool has_comma = false;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) has_comma = true;
  }
  std::vector<std::string> out;
  std::string cur;
  depth = 0;
  auto flush = [&] {
    std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
    cur.clear();
  };
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    const bool sep = depth == 0 && (has_comma ? c == ',' : std::isspace(static_cast<unsigned char>(c)) != 0);
    if (sep) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

int parse_count(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
}

std::string format_row(const Row& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) out += " ";
    out += r[i].str();
  }
  return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string require_args(const std::string& args, const char* usage) {
  if (args.empty()) throw UsageError(std::string("usage: ") + usage);
  return args;
}

}  // namespace

Value evaluate(const Expr& e, const Configuration& c) {
  const int n = c.ambient();
  auto arg = [&](std::size_t i) { return evaluate(*e.args[i], c); };
  switch (e.op) {
    case Op::Letter:
      return from_points({c.row_of(std::string_view(&e.letter, 1))}, n);
    case Op::Number:
      return Extensor::scalar(n, e.number);
    case Op::Join: {
      Extensor acc = Extensor::scalar(n, 1);
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        acc = join(acc, as_extensor(arg(i), "join"));
      }
      return acc;
    }
    case Op::Meet:
      return meet_coord(as_extensor(arg(0), "'^'"), as_extensor(arg(1), "'^'"));
    case Op::Geometric: {
      const std::string u = word_of(*e.args[0]);
      const std::string v = word_of(*e.args[1]);
      if (u.empty() || v.empty()) throw UsageError("'@' needs letter words on both sides");
      return whitney::evaluate(whitney::geometric_product(u, v, whitney::rank_oracle(c)), c);
    }
    case Op::Negate:
      return scale_value(Scalar(-1), arg(0));
    case Op::Multiply: {
      Value a = arg(0);
      Value b = arg(1);
      if (auto s = scalar_of(a)) return scale_value(*s, b);
      if (auto s = scalar_of(b)) return scale_value(*s, a);
      throw MathError("'*' needs a scalar operand");
    }
    case Op::Add:
      return add_values(arg(0), arg(1), false);
    case Op::Subtract:
      return add_values(arg(0), arg(1), true);
    case Op::Tensor: {
      TensorValue acc = as_tensor(arg(0));
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = TensorValue::outer(acc, as_tensor(arg(i)));
      return acc;
    }
    case Op::Boundary: {
      const Value v = arg(0);
      const Extensor& t = as_extensor(v, "boundary");
      if (t.step() == 0) throw MathError("boundary of a step-0 tensor");
      return affine::boundary(factor_points(t));
    }
    case Op::Bracket:
      return Extensor::scalar(n, bracket(as_extensor(arg(0), "bracket")));
    case Op::Star:
      return hodge_star(as_extensor(arg(0), "'!'"));
    case Op::Regressive:
      return regressive(arg(0), arg(1));
  }
  throw MathError("unknown expression");
}

std::string format_extensor(const Extensor& t) {
  if (t.step() == 0) return t.scalar_value().str() + "\n";
  std::string out;
  for (PlaceSet s : subsets_of_size(t.ambient(), t.step())) {
    out += "{" + s.label(t.ambient()) + "}: " + t.coord(s).str() + "\n";
  }
  return out;
}

std::string format_value(const Value& v) {
  if (const auto* e = std::get_if<Extensor>(&v)) return format_extensor(*e);
  if (const auto* t = std::get_if<TensorValue>(&v)) {
    if (t->is_zero()) return "0\n";
    std::string out;
    for (const auto& [key, value] : t->coords()) {
      for (PlaceSet s : key) out += "{" + s.label(t->ambient()) + "}";
      out += ": " + value.str() + "\n";
    }
    return out;
  }
  const auto& f = std::get<FlagValue>(v);
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += "level " + std::to_string(i + 1) + ": step " + std::to_string(f.levels()[i].step()) + "\n";
    out += format_extensor(f.levels()[i]);
  }
  return out;
}

const Configuration& Session::config() const {
  if (!config_) throw UsageError("no configuration loaded (use --config)");
  return *config_;
}

std::string Session::run(std::string_view line) {
  const std::string text = trim(line);
  if (text.empty() || text.front() == '#') return "";
  const std::size_t split = text.find_first_of(" \t");
  const std::string command = text.substr(0, split);
  const std::string args = split == std::string::npos ? "" : trim(text.substr(split));

  if (command == "eval") {
    ExprPtr e = parse_expression(require_args(args, "eval <expression>"));
    return format_value(evaluate(*e, config()));
  }

  if (command == "screw") {
    ExprPtr e = parse_expression(require_args(args, "screw <expression>"));
    const Value v = evaluate(*e, config());
    const Extensor& t = as_extensor(v, "screw");
    auto [l, couple] = affine::decompose_screw(t);
    return "L:\n" + format_extensor(l) + "C:\n" + format_extensor(couple);
  }

  if (command == "flag") {
    std::vector<std::string> parts = split_arguments(require_args(args, "flag <expr> <expr> ..."));
    Value acc = evaluate(*parse_expression(parts.front()), config());
    if (const auto* e = std::get_if<Extensor>(&acc)) acc = FlagValue(*e);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      acc = regressive(acc, evaluate(*parse_expression(parts[i]), config()));
    }
    if (!std::holds_alternative<FlagValue>(acc)) throw MathError("flag of a tensor");
    return format_value(acc);
  }

  if (command == "circuits") {
    matroids::Matroid m(config());
    std::vector<std::string> lines;
    for (const auto& c : matroids::circuits(m)) {
      lines.push_back(matroids::circuit_label(m, c.elements) + ": " + format_row(c.coefficients));
    }
    if (lines.empty()) lines.push_back("none");
    return join_lines(lines);
  }

  if (command == "derive") {
    const int k = parse_count(require_args(args, "derive <k>"), "derive count");
    matroids::Matroid d = matroids::derive_iterate(matroids::Matroid(config()), k);
    std::vector<std::string> lines = {"ambient " + std::to_string(d.configuration().ambient())};
    for (std::size_t i = 0; i < d.size(); ++i) {
      lines.push_back(d.labels()[i] + " = " + format_row(d.configuration().row(i)));
    }
    lines.push_back("rank " + std::to_string(d.size() == 0 ? 0 : d.rank()));
    return join_lines(lines);
  }

  if (command == "rank") {
    matroids::Matroid m(config());
    std::string letters;
    for (const auto& w : words(args)) letters += w;
    return std::to_string(letters.empty() ? m.rank() : m.rank_of(letters)) + "\n";
  }

  if (command == "drank") {
    std::vector<std::string> labels = words(require_args(args, "drank <circuit> ..."));
    matroids::Matroid m(config());
    Matrix rows;
    for (const auto& l : labels) rows.push_back(matroids::circuit_coefficients(m, m.subset_of(l)));
    return std::to_string(rank(rows, m.size())) + "\n";
  }

  if (command == "resolve") {
    std::vector<std::string> tokens = words(require_args(args, "resolve <columns> [circuits]"));
    matroids::Matroid m(config());
    std::vector<int> cols;
    Matrix s;
    for (const auto& t : tokens) {
      if (std::isdigit(static_cast<unsigned char>(t.front()))) {
        cols.push_back(parse_count(t, "column"));
      } else {
        s.push_back(matroids::circuit_coefficients(m, m.subset_of(t)));
      }
    }
    if (s.empty()) {
      // First independent circuit rows, in circuit order.
      const std::size_t need = m.size() - static_cast<std::size_t>(m.rank());
      for (const auto& c : matroids::circuits(m)) {
        if (s.size() == need) break;
        Matrix trial = s;
        trial.push_back(c.coefficients);
        if (rank(trial, m.size()) == trial.size()) s = std::move(trial);
      }
      if (s.size() != need) throw MathError("circuits do not span the dependencies");
    }
    return matroids::resolving_bracket(s, config().rows(), cols).str() + "\n";
  }

  if (command == "concurrent") {
    std::vector<std::string> lines = words(require_args(args, "concurrent <ab> <cd> <ef>"));
    if (lines.size() != 3) throw UsageError("usage: concurrent <ab> <cd> <ef>");
    const bool yes = matroids::three_lines_concurrent(config(), {lines[0], lines[1], lines[2]});
    return yes ? "true\n" : "false\n";
  }

  if (command == "product") {
    std::vector<std::string> w = words(require_args(args, "product <word> <word>"));
    if (w.size() != 2) throw UsageError("usage: product <word> <word>");
    auto rank = whitney::rank_oracle(config());
    return whitney::geometric_product(w[0], w[1], rank).str() + "\n" +
           whitney::geometric_product_alt(w[0], w[1], rank).str() + "\n";
  }

  if (command == "slice") {
    std::vector<std::string> w = words(require_args(args, "slice <word> <i> <j>"));
    if (w.size() != 3) throw UsageError("usage: slice <word> <i> <j>");
    whitney::WhitneyElement e =
        whitney::coproduct_slice(w[0], parse_count(w[1], "i"), parse_count(w[2], "j"));
    return e.str() + "\n" + format_value(whitney::evaluate(e, config()));
  }

  throw UsageError("unknown command '" + command + "'");
}

}  // namespace gca::cli
