#include "qsim/circuit_text.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace qsim {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

int parse_index(std::string_view word, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size() || value < 0) {
    throw CircuitParseError(line, "bad qubit index '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    const std::string_view op = words[0];
    auto arg = [&](std::size_t k) { return parse_index(words[k], line_no); };
    auto expect_args = [&](std::size_t count) {
      if (words.size() != count + 1) {
        throw CircuitParseError(line_no, std::string(op) + " takes " + std::to_string(count) +
                                             " argument(s), got " + std::to_string(words.size() - 1));
      }
    };
    try {
      if (op == "U1") {
        expect_args(1);
        circuit.push_back(u1(arg(1)));
      } else if (op == "U2") {
        expect_args(2);
        circuit.push_back(u2(arg(1), arg(2)));
      } else if (op == "U2DAG") {
        expect_args(2);
        circuit.push_back(u2_adjoint(arg(1), arg(2)));
      } else if (op == "NOT") {
        expect_args(1);
        circuit.push_back(not_gate(arg(1)));
      } else if (op == "CNOT") {
        expect_args(2);
        circuit.push_back(cnot(arg(1), arg(2)));
      } else if (op == "TOFFOLI") {
        expect_args(3);
        circuit.push_back(toffoli(arg(1), arg(2), arg(3)));
      } else if (op == "SWAP") {
        expect_args(2);
        circuit.push_back(swap_gate(arg(1), arg(2)));
      } else {
        throw CircuitParseError(line_no, "unknown gate '" + std::string(op) + "'");
      }
    } catch (const CircuitParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw CircuitParseError(line_no, e.what());
    }
  }
  return circuit;
}

std::string format_circuit(const Circuit& circuit) {
  std::ostringstream out;
  for (const Gate& gate : circuit) {
    if (std::holds_alternative<PhaseFlipGate>(gate) || std::holds_alternative<PermutationGate>(gate)) {
      throw std::invalid_argument(gate_name(gate) + " has no text form");
    }
    out << gate_name(gate);
    for (int q : gate_qubits(gate)) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

}  // namespace qsim
