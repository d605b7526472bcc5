#pragma once

#include <stdexcept>
#include <string>

#include "heisred/reduction.hpp"
#include "heisred/skolem.hpp"
#include "heisred/witness.hpp"

namespace heisred {

inline constexpr int kInstanceVersion = 1;

/// Document does not match the expected shape; pointer is a JSON pointer to
/// the offending value ("" for the whole document).
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, std::string const &message)
      : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer_(std::move(pointer)) {}

  std::string const &pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON: sorted keys, two-space indent, integers of unbounded size
/// as decimal strings, trailing newline.
std::string serialize_instance(ReductionInstance const &inst);
ReductionInstance deserialize_instance(std::string const &text);

/// Hex SHA-256 of serialize_instance(inst).
std::string instance_hash(ReductionInstance const &inst);

struct WitnessFile {
  std::string instance_hash;
  Word word;

  friend bool operator==(WitnessFile const &, WitnessFile const &) = default;
};

std::string serialize_witness(WitnessFile const &w);
WitnessFile deserialize_witness(std::string const &text);

std::string serialize_skolem(NormalizedSkolem const &ns);

std::string read_file(std::string const &path);

/// Writes to a temporary file beside path, then renames it into place.
void write_file_atomic(std::string const &path, std::string const &content);

}  // namespace heisred
