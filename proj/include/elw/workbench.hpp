#pragma once

// Command-line surface and the reproduction suite.

#include <iosfwd>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "elw/models.hpp"
#include "elw/mutations.hpp"
#include "elw/syntax.hpp"

namespace elw {

// Seeded random formulas. Sizes count nodes of the AST; abbreviations are
// never produced.
class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed) : rng_(seed) {}

  // Formula of exactly `size` nodes over x0..x{vars-1}; modal operators only
  // when `modal` is set. Without them an even size is rounded down.
  Formula exact(std::size_t size, VarIndex vars, bool modal);
  // Size drawn uniformly from 1..max_size.
  Formula upto(std::size_t max_size, VarIndex vars, bool modal);
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  std::mt19937_64 rng_;
};

// Names of the operations the suite must exercise, and the ones it did.
class Coverage {
 public:
  static const std::vector<std::string>& operations();
  void hit(const std::string& op) { seen_.insert(op); }
  std::vector<std::string> missing() const;

 private:
  std::set<std::string> seen_;
};

struct ReproCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct ReproItem {
  int number = 0;
  std::string anchor;
  std::string command;
  std::string expected;
  std::string observed;
  std::vector<ReproCheck> checks;

  bool pass() const;
};

struct ReproOptions {
  Mutations mut;
  std::string fixture_dir;
  // Item 10 reruns items 1 to 9 under each mutation.
  bool mutation_sweep = true;
};

struct ReproReport {
  std::vector<ReproItem> items;
  std::vector<std::string> uncovered;

  std::size_t passed() const;
  bool pass() const;
};

// Runs every acceptance item; deterministic for fixed options.
ReproReport reproduce(const ReproOptions& options);
ReproReport reproduce(const ReproOptions& options, Coverage& coverage);

std::string render_report(const ReproReport& r);
std::string report_to_json(const ReproReport& r);

// Directory holding the shipped fixture models, as configured at build time.
std::string default_fixture_dir();

// Runs the CLI on argv without the program name. Returns the exit status:
// 0 success, 1 check failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elw
