#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fano {

struct WpsHypersurface {
  std::vector<int> weights;
  int degree = 0;
};
struct CompleteIntersection {
  int ambient_dim = 0;
  std::vector<int> degrees;
};
struct GrassmannianSection {
  int k = 0, n = 0, linear = 0, quadrics = 0;
};
enum class HermitianType { DIII, CI };
struct HermitianSection {
  HermitianType type;
  int linear = 0;
};
struct G2ContactSection {
  int linear = 0;
};
struct BundleZeroLocus {
  std::string tag;
};
/// A hypersurface of P(Q), then a member of |O(section)| on it.
struct DoubleStructure {
  std::vector<int> weights;
  int degree = 0;
  int section = 0;
};

using Description = std::variant<WpsHypersurface, CompleteIntersection, GrassmannianSection, HermitianSection,
                                 G2ContactSection, BundleZeroLocus, DoubleStructure>;

std::string_view kind_name(const Description& d);

struct FanoRecord {
  int no = 0;
  int index = 0;
  int degree = 0;  // H^3
  int genus = 0;
  Description description;
  std::string text;
};

/// Reads the pipe-separated table; '#' starts a comment line.
std::vector<FanoRecord> parse_table(std::istream& in);
std::vector<FanoRecord> load_table(const std::string& path);
/// $FANO_TABLE_PATH if set, else the path configured at build time.
std::string default_table_path();
std::vector<FanoRecord> load_default_table();

/// r^3 d / 2 + 1.
long genus_of(long r, long d);
/// The anticanonical map lands in P^(g+1).
int embedding_target_dim(int g);

/// State of an ambient manifold M for the hypersurface rule.
struct AmbientState {
  bool h0_vanishes = false;  // H^0(M, Omega^1(1)) = 0
  int b2 = 1;
  int dim = 0;
};

enum class RuleVerdict { Vanishes, Inconclusive };
std::string_view to_string(RuleVerdict v);

/// V in |O_M(d)| with dim M >= 4 and H^0(M, Omega^1_M(1)) = 0 has
/// H^0(V, Omega^1_V(1)) = 0 if d >= 2 (Kodaira, Kodaira-Akizuki-Nakano) or
/// d = 1 and b2(M) = 1 (Lefschetz, h^{1,1} = 1).
RuleVerdict hypersurface_rule(const AmbientState& ambient, int d);

/// One computed invariant of a record.
struct RecordCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool ok = false;
  /// False when the expected side rests on a cited value.
  bool computed_fully = true;
};

/// Genus identity, the index/genus ranges of the classification, and the
/// dimension, degree and index of the description.
std::vector<RecordCheck> validate_record(const FanoRecord& rec);

enum class H0Value { Zero, One, ThreeGeneral };
std::string_view to_string(H0Value v);

struct RuleApplication {
  std::string rule;
  std::string citation;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string verdict;
};

struct VanishingReport {
  int row = 0;
  H0Value h0 = H0Value::Zero;
  std::vector<RuleApplication> trace;
  /// Facts taken from the literature rather than computed here.
  std::vector<std::string> axioms;
};

/// h^0(V, Omega^1_V(1)) for one row, with the rule chain that gives it.
VanishingReport classify_row(const FanoRecord& rec);

/// Throws InconsistencyError for an empty trace or an uncited step.
void validate_report(const VanishingReport& report);

/// Bookkeeping for 0 -> kernel -> T_V|_l -> O(1 - a) + torsion -> 0 on a line l.
struct LineRestriction {
  int a = 0;
  int torsion_length = 0;
  /// Summands of the middle term receiving the kernel, and the one left free.
  std::vector<int> hit;
  int free_degree = 0;
  int h0_coker = 0;
  int h1_coker = 0;
  int chi_middle = 0;
  int chi_kernel = 0;
  int chi_coker = 0;
};

/// The kernel summands map onto the lowest-degree middle summands that can
/// receive them (degree at least the kernel degree); the remaining summand
/// O(e) is the free part, so a = 1 - e, and the torsion length is the degree
/// difference. Needs a rank-3 middle term and a rank-2 kernel.
LineRestriction line_restriction_order(std::vector<int> splitting, std::vector<int> kernel);

}  // namespace fano
