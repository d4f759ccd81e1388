// Proof files: one step per line,
//
//   <index>. <formula> ; <justification>
//
// with justification one of `taut`, `axiom <name>`, `mp <i> <j>`,
// `necA <i>`, `rs <i>`. Indices start at 1 and increase by one. Blank lines
// and `#` comments are ignored.

#ifndef EXPERTISE_PROOF_IO_H_
#define EXPERTISE_PROOF_IO_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "expertise/proofs.h"

namespace expertise {

class ProofFormatError : public std::runtime_error {
 public:
  ProofFormatError(std::size_t line, const std::string& message);
  // 1-based line number, 0 for whole-file errors such as "no steps".
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Derivation ParseProof(std::string_view text);
Derivation LoadProofFile(const std::string& path);
std::string WriteProof(const Derivation& d);

}  // namespace expertise

#endif  // EXPERTISE_PROOF_IO_H_
