#include "expertise/proof_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace expertise {

ProofFormatError::ProofFormatError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t Number(std::string_view s, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ProofFormatError(line, "expected a step number, found '" + std::string(s) + "'");
  return value;
}

Justification ParseJustification(std::string_view text, std::size_t line) {
  const auto w = Words(text);
  if (w.empty()) throw ProofFormatError(line, "missing justification");
  auto arity = [&](std::size_t n) {
    if (w.size() != n + 1)
      throw ProofFormatError(line, "'" + std::string(w[0]) + "' takes " + std::to_string(n) +
                                       " argument" + (n == 1 ? "" : "s"));
  };
  if (w[0] == "taut") {
    arity(0);
    return justification::Taut{};
  }
  if (w[0] == "axiom") {
    arity(1);
    auto name = AxiomFromLabel(w[1]);
    if (!name) throw ProofFormatError(line, "unknown axiom '" + std::string(w[1]) + "'");
    return justification::Axiom{*name, std::nullopt};
  }
  if (w[0] == "mp") {
    arity(2);
    return justification::MP{Number(w[1], line), Number(w[2], line)};
  }
  if (w[0] == "necA") {
    arity(1);
    return justification::NecA{Number(w[1], line)};
  }
  if (w[0] == "rs") {
    arity(1);
    return justification::RS{Number(w[1], line)};
  }
  throw ProofFormatError(line, "unknown justification '" + std::string(w[0]) + "'");
}

}  // namespace

Derivation ParseProof(std::string_view text) {
  Derivation d;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;

    const auto dot = line.find('.');
    if (dot == std::string_view::npos) throw ProofFormatError(line_no, "expected '<index>.'");
    const std::size_t index = Number(Trim(line.substr(0, dot)), line_no);
    if (index != d.steps.size() + 1)
      throw ProofFormatError(line_no, "expected step " + std::to_string(d.steps.size() + 1) +
                                          ", found " + std::to_string(index));
    const std::string_view rest = line.substr(dot + 1);
    const auto semi = rest.rfind(';');
    if (semi == std::string_view::npos) throw ProofFormatError(line_no, "missing ';'");

    Formula f = [&] {
      try {
        return Parse(rest.substr(0, semi));
      } catch (const ParseError& e) {
        throw ProofFormatError(line_no, e.what());
      }
    }();
    if (!InL(f)) throw ProofFormatError(line_no, "proof formulas must not contain K");
    d.steps.push_back({std::move(f), ParseJustification(rest.substr(semi + 1), line_no)});
  }
  if (d.steps.empty()) throw ProofFormatError(0, "no steps");
  return d;
}

Derivation LoadProofFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProofFormatError(0, "cannot open proof file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseProof(buf.str());
}

std::string WriteProof(const Derivation& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.steps.size(); ++i)
    os << i + 1 << ". " << Render(d.steps[i].formula) << " ; "
       << RenderJustification(d.steps[i].justification) << '\n';
  return os.str();
}

}  // namespace expertise
