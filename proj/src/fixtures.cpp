#include "seqpipe/fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "seqpipe/dsl/eval.hpp"
#include "seqpipe/errors.hpp"

namespace seqpipe {

std::size_t Report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

std::size_t Report::failed() const { return cases.size() - passed(); }

namespace {

using Rows = std::vector<std::vector<FieldElem>>;

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\n") == std::string::npos; }

FieldElem entry(const std::string& text) {
  const dsl::Value v = dsl::evaluate(text, dsl::Env{1, std::nullopt});
  if (v.is<FieldElem>()) return v.as<FieldElem>();
  if (v.is<Series>() && v.as<Series>().prec() == 1) return v.as<Series>()[0];
  throw std::invalid_argument("fixture entry '" + text + "' is not a scalar");
}

std::vector<FieldElem> entries(const std::string& text) {
  std::vector<FieldElem> out;
  if (blank(text)) return out;
  for (const auto& part : split_top(text, ',')) out.push_back(entry(part));
  return out;
}

Rows rows(const std::string& text) {
  Rows out;
  for (const auto& part : split_top(text, ';')) out.push_back(entries(part));
  return out;
}

std::string show(const FieldElem& e) { return e.to_string(); }

/// First mismatch between an expected prefix and the actual entries.
std::optional<std::string> compare_prefix(const std::vector<FieldElem>& want,
                                          const std::vector<FieldElem>& got,
                                          const std::string& what) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (i >= got.size()) {
      return what + " has only " + std::to_string(got.size()) + " entries, expected " +
             std::to_string(want.size());
    }
    if (!(want[i] == got[i])) {
      return what + " entry " + std::to_string(i) + ": expected " + show(want[i]) + ", got " +
             show(got[i]);
    }
  }
  return std::nullopt;
}

/// Rows compared on the transcribed width; entries beyond it and up to
/// `width` must be zero.
std::optional<std::string> compare_rows(const Rows& want, const Rows& got, bool square) {
  if (got.size() < want.size()) {
    return "only " + std::to_string(got.size()) + " rows, expected " + std::to_string(want.size());
  }
  for (std::size_t n = 0; n < want.size(); ++n) {
    const std::size_t width = square ? want.size() : n + 1;
    for (std::size_t k = 0; k < std::max(width, want[n].size()); ++k) {
      const FieldElem w = k < want[n].size() ? want[n][k] : FieldElem();
      const FieldElem g = k < got[n].size() ? got[n][k] : FieldElem();
      if (!(w == g)) {
        return "row " + std::to_string(n) + " entry " + std::to_string(k) + ": expected " +
               show(w) + ", got " + show(g);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check(const Fixture& f) {
  std::vector<FieldElem> seq;
  if (f.kind == Expect::Sequence || f.kind == Expect::SFrac) seq = entries(f.expected);
  const dsl::Value v = dsl::evaluate(f.build, fixture_env(f));
  auto wrong_kind = [&](std::string_view want) {
    return std::optional<std::string>("expected a " + std::string(want) + ", got a " +
                                      std::string(dsl::kind_name(v)));
  };
  switch (f.kind) {
    case Expect::Sequence: {
      if (v.is<Series>()) return compare_prefix(seq, v.as<Series>().coeffs(), "sequence");
      if (v.is<dsl::List>()) {
        std::vector<FieldElem> got;
        for (const auto& item : v.as<dsl::List>().items) {
          if (!item.is<FieldElem>()) return wrong_kind("list of scalars");
          got.push_back(item.as<FieldElem>());
        }
        return compare_prefix(seq, got, "sequence");
      }
      return wrong_kind("series");
    }
    case Expect::SFrac:
      if (!v.is<SFraction>()) return wrong_kind("sfraction");
      return compare_prefix(seq, v.as<SFraction>().s, "s");
    case Expect::JFrac: {
      if (!v.is<JFraction>()) return wrong_kind("jfraction");
      const auto parts = split_top(f.expected, '|');
      if (parts.size() != 2) throw std::invalid_argument("J-fraction fixture needs 'b | lam'");
      if (auto d = compare_prefix(entries(parts[0]), v.as<JFraction>().b, "b")) return d;
      return compare_prefix(entries(parts[1]), v.as<JFraction>().lam, "lam");
    }
    case Expect::Triangle:
      if (!v.is<Triangle>()) return wrong_kind("triangle");
      return compare_rows(rows(f.expected), v.as<Triangle>().rows, false);
    case Expect::Matrix:
      if (!v.is<SquareMatrix>()) return wrong_kind("matrix");
      return compare_rows(rows(f.expected), v.as<SquareMatrix>().m, true);
    case Expect::Scalar:
      if (!v.is<FieldElem>()) return wrong_kind("scalar");
      if (!(v.as<FieldElem>() == entry(f.expected))) {
        return "expected " + f.expected + ", got " + show(v.as<FieldElem>());
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

dsl::Env fixture_env(const Fixture& f) {
  dsl::Env env;
  if (f.kind == Expect::Sequence) env.order = std::max<std::size_t>(entries(f.expected).size(), 1);
  return env;
}

CaseResult run_fixture(const Fixture& f) {
  CaseResult r{f.id, false, ""};
  try {
    if (auto d = check(f)) {
      r.detail = *d;
    } else {
      r.pass = true;
    }
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

Report run_fixtures(const std::optional<std::vector<std::string>>& ids, unsigned jobs) {
  std::vector<const Fixture*> todo;
  Report report;
  std::vector<std::size_t> slot;  // report index per todo entry
  if (!ids) {
    for (const auto& f : fixtures()) todo.push_back(&f);
  }
  report.cases.resize(ids ? ids->size() : todo.size());
  if (ids) {
    for (std::size_t i = 0; i < ids->size(); ++i) {
      auto it = std::find_if(fixtures().begin(), fixtures().end(),
                             [&](const Fixture& f) { return f.id == (*ids)[i]; });
      if (it == fixtures().end()) {
        report.cases[i] = {(*ids)[i], false, "no fixture with this id"};
      } else {
        todo.push_back(&*it);
        slot.push_back(i);
      }
    }
  } else {
    for (std::size_t i = 0; i < todo.size(); ++i) slot.push_back(i);
  }

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      report.cases[slot[i]] = run_fixture(*todo[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace seqpipe
