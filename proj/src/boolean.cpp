#include "qsim/boolean.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qsim/errors.hpp"

namespace qsim::boolean {

int output_count(GateKind kind) { return kind == GateKind::kFanout ? 2 : 1; }

int input_count(GateKind kind) {
  switch (kind) {
    case GateKind::kConst1: return 0;
    case GateKind::kXor:
    case GateKind::kAnd: return 2;
    default: return 1;
  }
}

std::string_view kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kId: return "ID";
    case GateKind::kConst1: return "CONST1";
    case GateKind::kXor: return "XOR";
    case GateKind::kAnd: return "AND";
    case GateKind::kFanout: return "FANOUT";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// BooleanCircuit

BooleanCircuit::BooleanCircuit(int n_inputs) : n_inputs_(n_inputs), wire_count_(n_inputs) {
  if (n_inputs < 0) throw std::invalid_argument("negative input count");
}

int BooleanCircuit::add(BoolGate gate) {
  const int arity = input_count(gate.kind);
  const int inputs[2] = {gate.a, gate.b};
  for (int k = 0; k < arity; ++k) {
    if (inputs[k] < 0 || inputs[k] >= wire_count_) {
      throw std::out_of_range(std::string(kind_name(gate.kind)) + " reads undefined wire " +
                              std::to_string(inputs[k]));
    }
  }
  if (arity < 2) gate.b = -1;
  if (arity < 1) gate.a = -1;
  gates_.push_back(gate);
  const int first = wire_count_;
  wire_count_ += output_count(gate.kind);
  return first;
}

void BooleanCircuit::set_outputs(std::vector<int> wires) {
  for (int w : wires) {
    if (w < 0 || w >= wire_count_) throw std::out_of_range("output names undefined wire " + std::to_string(w));
  }
  outputs_ = std::move(wires);
}

int BooleanCircuit::total_gate_output_size() const {
  int total = 0;
  for (const BoolGate& g : gates_) total += output_count(g.kind);
  return total;
}

namespace {

template <class WireStore>
void run_gates(const BooleanCircuit& bc, WireStore& wires) {
  std::size_t next = static_cast<std::size_t>(bc.n_inputs());
  for (const BoolGate& g : bc.gates()) {
    const auto a = static_cast<std::size_t>(g.a);
    const auto b = static_cast<std::size_t>(g.b);
    switch (g.kind) {
      case GateKind::kId: wires[next++] = wires[a]; break;
      case GateKind::kConst1: wires[next++] = 1; break;
      case GateKind::kXor: wires[next++] = wires[a] ^ wires[b]; break;
      case GateKind::kAnd: wires[next++] = wires[a] & wires[b]; break;
      case GateKind::kFanout:
        wires[next] = wires[a];
        wires[next + 1] = wires[a];
        next += 2;
        break;
    }
  }
}

}  // namespace

Bits eval_circuit(const BooleanCircuit& bc, std::span<const std::uint8_t> input) {
  if (input.size() != static_cast<std::size_t>(bc.n_inputs())) {
    throw std::invalid_argument("circuit expects " + std::to_string(bc.n_inputs()) + " inputs, got " +
                                std::to_string(input.size()));
  }
  Bits wires(static_cast<std::size_t>(bc.wire_count()), 0);
  for (std::size_t i = 0; i < input.size(); ++i) wires[i] = input[i] & 1U;
  run_gates(bc, wires);
  Bits out;
  out.reserve(bc.outputs().size());
  for (int w : bc.outputs()) out.push_back(wires[static_cast<std::size_t>(w)]);
  return out;
}

std::uint64_t eval_circuit(const BooleanCircuit& bc, std::uint64_t input) {
  Bits bits(static_cast<std::size_t>(bc.n_inputs()));
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (input >> i) & 1U;
  const Bits out = eval_circuit(bc, bits);
  std::uint64_t packed = 0;
  for (std::size_t k = 0; k < out.size(); ++k) packed |= std::uint64_t{out[k]} << k;
  return packed;
}

namespace {

std::vector<std::string_view> words_of(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

int to_int(std::string_view word, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw std::invalid_argument("line " + std::to_string(line) + ": bad integer '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

BooleanCircuit parse_boolean_circuit(std::string_view text) {
  std::optional<BooleanCircuit> bc;
  bool have_outputs = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = words_of(line);
    if (words.empty()) continue;
    const std::string prefix = "line " + std::to_string(line_no) + ": ";

    if (words[0] == "INPUTS") {
      if (bc) throw std::invalid_argument(prefix + "INPUTS given twice");
      if (words.size() != 2) throw std::invalid_argument(prefix + "INPUTS takes one count");
      bc.emplace(to_int(words[1], line_no));
      continue;
    }
    if (!bc) throw std::invalid_argument(prefix + "circuit must start with INPUTS");
    if (have_outputs) throw std::invalid_argument(prefix + "nothing may follow OUTPUTS");
    if (words[0] == "OUTPUTS") {
      std::vector<int> outs;
      for (std::size_t k = 1; k < words.size(); ++k) outs.push_back(to_int(words[k], line_no));
      try {
        bc->set_outputs(std::move(outs));
      } catch (const std::out_of_range& e) {
        throw std::invalid_argument(prefix + e.what());
      }
      have_outputs = true;
      continue;
    }

    GateKind kind{};
    if (words[0] == "ID") kind = GateKind::kId;
    else if (words[0] == "CONST1") kind = GateKind::kConst1;
    else if (words[0] == "XOR") kind = GateKind::kXor;
    else if (words[0] == "AND") kind = GateKind::kAnd;
    else if (words[0] == "FANOUT") kind = GateKind::kFanout;
    else throw std::invalid_argument(prefix + "unknown gate '" + std::string(words[0]) + "'");

    const int arity = input_count(kind);
    if (static_cast<int>(words.size()) != arity + 1) {
      throw std::invalid_argument(prefix + std::string(words[0]) + " takes " + std::to_string(arity) +
                                  " wire(s)");
    }
    BoolGate g{kind};
    if (arity >= 1) g.a = to_int(words[1], line_no);
    if (arity >= 2) g.b = to_int(words[2], line_no);
    try {
      bc->add(g);
    } catch (const std::out_of_range& e) {
      throw std::invalid_argument(prefix + e.what());
    }
  }
  if (!bc) throw std::invalid_argument("empty circuit: missing INPUTS");
  if (!have_outputs) throw std::invalid_argument("missing OUTPUTS line");
  return *std::move(bc);
}

std::string format_boolean_circuit(const BooleanCircuit& bc) {
  std::ostringstream out;
  out << "INPUTS " << bc.n_inputs() << '\n';
  for (const BoolGate& g : bc.gates()) {
    out << kind_name(g.kind);
    if (input_count(g.kind) >= 1) out << ' ' << g.a;
    if (input_count(g.kind) >= 2) out << ' ' << g.b;
    out << '\n';
  }
  out << "OUTPUTS";
  for (int w : bc.outputs()) out << ' ' << w;
  out << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// BooleanPolynomial

BooleanPolynomial::BooleanPolynomial(std::vector<std::uint64_t> monomials) {
  std::sort(monomials.begin(), monomials.end());
  // x + x = 0: keep a monomial only if it occurs an odd number of times.
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) monomials_.push_back(monomials[i]);
    i = j;
  }
}

BooleanPolynomial BooleanPolynomial::constant(bool one) {
  return one ? BooleanPolynomial({0}) : BooleanPolynomial();
}

BooleanPolynomial BooleanPolynomial::variable(int index) {
  if (index < 0 || index >= 64) throw std::out_of_range("variable index out of range");
  return BooleanPolynomial({std::uint64_t{1} << index});
}

bool BooleanPolynomial::evaluate(std::uint64_t point) const {
  bool value = false;
  for (std::uint64_t mono : monomials_) value ^= (mono & point) == mono;
  return value;
}

BooleanPolynomial BooleanPolynomial::operator+(const BooleanPolynomial& rhs) const {
  std::vector<std::uint64_t> sum;
  std::set_symmetric_difference(monomials_.begin(), monomials_.end(), rhs.monomials_.begin(),
                                rhs.monomials_.end(), std::back_inserter(sum));
  BooleanPolynomial out;
  out.monomials_ = std::move(sum);
  return out;
}

BooleanPolynomial BooleanPolynomial::operator*(const BooleanPolynomial& rhs) const {
  std::vector<std::uint64_t> terms;
  terms.reserve(monomials_.size() * rhs.monomials_.size());
  for (std::uint64_t a : monomials_) {
    for (std::uint64_t b : rhs.monomials_) terms.push_back(a | b);  // x^2 = x
  }
  return BooleanPolynomial(std::move(terms));
}

std::string BooleanPolynomial::to_string() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (std::uint64_t mono : monomials_) {
    if (!out.empty()) out += " + ";
    if (mono == 0) {
      out += "1";
      continue;
    }
    for (int i = 0; i < 64; ++i) {
      if ((mono >> i) & 1U) out += "x" + std::to_string(i + 1);
    }
  }
  return out;
}

BooleanPolynomial interpolate(std::span<const std::uint8_t> table) {
  const std::size_t size = table.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("truth table length must be a power of two");
  }
  // Coefficient of monomial T is the F2 sum of f(y) over y contained in T
  // (expanding each delta_y(x) = prod_i (x_i + y_i + 1) gives every
  // superset of y once). Computed with the in-place subset-sum transform.
  std::vector<std::uint8_t> coeff(table.begin(), table.end());
  for (auto& c : coeff) c &= 1U;
  for (std::size_t step = 1; step < size; step <<= 1) {
    for (std::size_t x = 0; x < size; ++x) {
      if (x & step) coeff[x] ^= coeff[x ^ step];
    }
  }
  std::vector<std::uint64_t> monomials;
  for (std::size_t x = 0; x < size; ++x) {
    if (coeff[x]) monomials.push_back(x);
  }
  return BooleanPolynomial(std::move(monomials));
}

// ---------------------------------------------------------------------------
// SAT

void SatInstance::validate() const {
  if (m < 0) throw std::invalid_argument("negative variable count");
  if (m > 63) throw std::invalid_argument("at most 63 variables are representable");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (const auto* set : {&clauses[i].s, &clauses[i].t}) {
      for (int k : *set) {
        if (k < 1 || k > m) {
          throw std::invalid_argument("clause " + std::to_string(i + 1) + " names variable " +
                                      std::to_string(k) + " outside 1.." + std::to_string(m));
        }
      }
    }
  }
}

std::uint64_t SatInstance::size() const { return static_cast<std::uint64_t>(m) * clauses.size(); }

bool SatInstance::is_3sat() const {
  for (const Clause& c : clauses) {
    std::vector<int> all = c.s;
    all.insert(all.end(), c.t.begin(), c.t.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() != 3) return false;
  }
  return true;
}

bool sat_eval(const SatInstance& u, Assignment v) {
  auto var = [v](int k) -> unsigned { return (v >> (k - 1)) & 1U; };
  unsigned product = 1;
  for (const Clause& c : u.clauses) {
    unsigned term = 1;
    for (int k : c.s) term &= 1U ^ var(k);
    for (int j : c.t) term &= var(j);
    product &= 1U ^ term;
  }
  return product != 0;
}

namespace {

// Position i in lexicographic order of (v_1, ..., v_m) -> assignment mask.
Assignment lex_to_mask(std::uint64_t i, int m) {
  Assignment mask = 0;
  for (int k = 1; k <= m; ++k) mask |= ((i >> (m - k)) & 1U) << (k - 1);
  return mask;
}

}  // namespace

std::optional<Assignment> sat_brute_force(const SatInstance& u, int max_variables) {
  u.validate();
  if (u.m > max_variables) {
    throw CapacityError("SAT instance has " + std::to_string(u.m) + " variables; cap is " +
                        std::to_string(max_variables));
  }
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << u.m);
  constexpr std::int64_t kBlock = std::int64_t{1} << 16;
  for (std::int64_t start = 0; start < total; start += kBlock) {
    const std::int64_t stop = std::min(total, start + kBlock);
    std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first) if (stop - start >= 4096)
    for (std::int64_t i = start; i < stop; ++i) {
      if (i < first && sat_eval(u, lex_to_mask(static_cast<std::uint64_t>(i), u.m))) first = i;
    }
    if (first != std::numeric_limits<std::int64_t>::max()) {
      return lex_to_mask(static_cast<std::uint64_t>(first), u.m);
    }
  }
  return std::nullopt;
}

SatInstance parse_sat_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed SAT JSON: ") + e.what());
  }
  try {
    SatInstance u;
    u.m = doc.at("m").get<int>();
    for (const auto& c : doc.at("clauses")) {
      Clause clause;
      if (c.contains("S")) clause.s = c.at("S").get<std::vector<int>>();
      if (c.contains("T")) clause.t = c.at("T").get<std::vector<int>>();
      u.clauses.push_back(std::move(clause));
    }
    u.validate();
    return u;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed SAT instance: ") + e.what());
  }
}

std::string sat_to_json(const SatInstance& u) {
  nlohmann::json doc;
  doc["m"] = u.m;
  doc["clauses"] = nlohmann::json::array();
  for (const Clause& c : u.clauses) doc["clauses"].push_back({{"S", c.s}, {"T", c.t}});
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Pairing

std::uint64_t pairing(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("pairing is defined for m, n >= 1");
  const std::uint64_t s = m + n;
  return m + (s - 1) * (s - 2) / 2;
}

std::pair<std::uint64_t, std::uint64_t> unpairing(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("unpairing is defined for k >= 1");
  // Largest d = s - 2 with d(d+1)/2 < k.
  auto tri = [](std::uint64_t d) { return d * (d + 1) / 2; };
  auto d = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(k)) - 1.0) / 2.0);
  while (d > 0 && tri(d) >= k) --d;
  while (tri(d + 1) < k) ++d;
  const std::uint64_t m = k - tri(d);
  return {m, d + 2 - m};
}

}  // namespace qsim::boolean
