#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqpipe/dsl/eval.hpp"

namespace seqpipe {

enum class Expect { Sequence, Triangle, JFrac, SFrac, Matrix, Scalar };

/// One printed table or sequence and the expression that should reproduce it.
///
/// `expected` is transcribed by hand. Entries are separated by ',' and rows
/// by ';'; each entry is a scalar expression in r such as "r*(2*r+1)". A
/// J-fraction is written "b entries | lam entries". Comparison is by prefix:
/// sequences and fraction entries must agree on the transcribed terms,
/// triangle and matrix rows on the transcribed rows (missing entries are
/// zero).
struct Fixture {
  std::string id;
  std::string build;
  Expect kind;
  std::string expected;
  std::string locus;
};

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CaseResult> cases;
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

const std::vector<Fixture>& fixtures();

/// nullopt runs every fixture; an explicit list runs those ids (unknown ids
/// fail). Fixtures run concurrently on up to `jobs` threads.
Report run_fixtures(const std::optional<std::vector<std::string>>& ids, unsigned jobs = 0);
CaseResult run_fixture(const Fixture& f);

/// The environment a fixture's build is evaluated in: sequences use their
/// transcribed length as the order.
dsl::Env fixture_env(const Fixture& f);

}  // namespace seqpipe
