#ifndef COXCERT_COXETER_HPP
#define COXCERT_COXETER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxcert {

using BigNat = boost::multiprecision::cpp_int;

/// Thrown by parse_graph on malformed input; `pos` is a byte offset into
/// the (whitespace-stripped) input text.
struct ParseError : std::runtime_error {
  ParseError(std::size_t pos_, const std::string& what_)
      : std::runtime_error("parse error at " + std::to_string(pos_) + ": " + what_),
        pos(pos_) {}
  std::size_t pos;
};

// A Coxeter matrix of rank n.  Off-diagonal bond orders are integers >= 2
// or infinite; kInf (= 0) is the dedicated sentinel for an infinite bond
// and must never take part in arithmetic.
class CoxeterMatrix {
 public:
  static constexpr int kInf = 0;

  explicit CoxeterMatrix(int rank)
      : rank_(rank), m_(static_cast<std::size_t>(rank) * rank, 2) {
    if (rank < 1) throw std::invalid_argument("CoxeterMatrix: rank must be >= 1");
    for (int i = 0; i < rank; ++i) m_[idx(i, i)] = 1;
  }

  int rank() const { return rank_; }

  // Raw entry: 1 on the diagonal, >= 2 or kInf off it.
  int at(int i, int j) const { return m_[idx(i, j)]; }
  bool is_inf(int i, int j) const { return m_[idx(i, j)] == kInf; }

  // Finite off-diagonal value; throws if the bond is infinite.
  int finite_at(int i, int j) const {
    int v = m_[idx(i, j)];
    if (v == kInf) throw std::logic_error("finite_at: entry is infinite");
    return v;
  }

  void set(int i, int j, int m) {
    if (i == j) throw std::invalid_argument("set: diagonal entries are fixed");
    m_[idx(i, j)] = m;
    m_[idx(j, i)] = m;
  }
  void set_inf(int i, int j) { set(i, j, kInf); }

  bool operator==(const CoxeterMatrix& o) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * rank_ + j;
  }
  int rank_;
  std::vector<int> m_;
};

enum class TypeFamily { A, B, D, E6, E7, E8, F4, H3, H4, I2, Unknown };

// One irreducible graph type.  `param` is n for A/B/D, m for I2 (with
// param == 0 meaning the infinite dihedral graph), and unused otherwise.
struct IrreducibleType {
  TypeFamily family = TypeFamily::Unknown;
  int param = 0;

  bool operator==(const IrreducibleType&) const = default;
};

std::string type_name(const IrreducibleType& t);

struct Violation {
  std::string kind;  // "diagonal" | "symmetry" | "off-diagonal < 2"
  int i = 0, j = 0;
};

// Empty result means all CoxeterMatrix invariants hold.
std::vector<Violation> validate(const CoxeterMatrix& M);

struct Component {
  CoxeterMatrix matrix;
  std::vector<int> original_indices;  // component generator -> parent generator
};

// Connected components of the Coxeter graph (edges where m >= 3 or inf),
// ordered by smallest original generator index.
std::vector<Component> components(const CoxeterMatrix& M);

// Matches an irreducible matrix against the finite catalog (plus I2(inf))
// up to graph isomorphism.  Throws std::invalid_argument on reducible input.
// Rank-2 convention: m=3 -> A2, m=4 -> B2, otherwise I2(m).
IrreducibleType classify(const CoxeterMatrix& M);

// The graph of a catalog type, with the standard generator numbering.
CoxeterMatrix catalog_matrix(const IrreducibleType& t);

// Group order; std::nullopt means infinite.
std::optional<BigNat> order_of(const IrreducibleType& t);
std::optional<BigNat> order_of(const CoxeterMatrix& M);

// True iff every finite bond order is coprime to p.  Infinite bonds are
// coprime to everything.  Throws std::invalid_argument unless p is an odd
// prime.
bool is_p_free(const CoxeterMatrix& M, int p);
bool is_p_free(const IrreducibleType& t, int p);

bool is_odd_prime(int p);

// One row of the published order/p-freeness table.
struct CatalogEntry {
  std::string name;        // "A1", "A_n (n>=2)", ..., "I2(m) (m>=3)"
  std::string order;       // "2", "(n+1)!", "2^7*3^4*5 = 51840", "2m", ...
  std::string p_free_rule; // "p >= 3", "p >= 5", "p >= 7", "p !| m"
};

// The 12-row catalog: families A1, A_n, B2, B_n, D_n, E6, E7, E8, F4,
// H3, H4, I2(m).
std::vector<CatalogEntry> appendix_catalog();

// Concrete instantiated rows (numeric orders, minimal p or rule) for
// A/B/D up to max_rank and I2 up to max_m.
struct InstantiatedEntry {
  IrreducibleType type;
  BigNat order;
  std::string p_free_rule;
};
std::vector<InstantiatedEntry> instantiate_catalog(int max_rank, int max_m);

struct TorsionScanEntry {
  IrreducibleType type;
  BigNat order;
  bool p_free = false;
  bool order_coprime_to_p = false;  // meaningful only when p_free
};

struct TorsionScanReport {
  int p = 0;
  std::vector<TorsionScanEntry> entries;  // all finite irreducible types, rank <= p-2
  std::string i2_rule;  // symbolic: rank-2 family handled by the p !| m rule
  bool all_pass = false;  // every p-free entry has order coprime to p
};

// Enumerates the finite irreducible types of rank <= p-2 and certifies
// that the p-free ones have order coprime to p.  Requires p >= 5 prime.
TorsionScanReport scan_low_rank_p_torsion(int p);

// Graph DSL:
//   catalog names     A4, B3, D5, E6, E7, E8, F4, H3, H4, I2(7), I2(inf), Dinf
//   explicit form     n=<rank>; i-j:<label>; ...   (1-based i,j; label >= 3 or "inf";
//                     omitted pairs mean m = 2)
//   disjoint unions   A2+I2(5)
// Whitespace is ignored everywhere.
CoxeterMatrix parse_graph(const std::string& text);

// Canonical display name: component type names joined by '+'.
std::string describe(const CoxeterMatrix& M);

}  // namespace coxcert

#endif
