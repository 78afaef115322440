#pragma once

#include "bdcluster/bdtriple.hpp"
#include "bdcluster/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bdc {

struct Pos {
  int r = 0, c = 0;
  friend bool operator==(const Pos&, const Pos&) = default;
  friend auto operator<=>(const Pos&, const Pos&) = default;
  std::string str() const { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }
};

// A block of the variable matrix X placed inside a realized matrix.
struct Block {
  std::vector<int> rows, cols;  // 1-based indices into X
  int row_off = 0, col_off = 0;
};

enum class MinorKind { Plain, GluedRow, GluedCol };
enum class DecoTag { Right, Left, Up, Down, Trunc };

struct MinorSpec {
  MinorKind kind = MinorKind::Plain;
  int N = 0, alpha = 0, beta = 0;
  Pos anchor;
  std::vector<Block> blocks;  // one block for Plain
  int size = 0;
  int trunc = 0;  // trailing rows and columns dropped at realization (glued kinds)
  std::vector<DecoTag> edits;  // arrow decorations of glued kinds, applied after truncation

  // For plain specs: the X rows and columns.
  const std::vector<int>& rows() const { return blocks.front().rows; }
  const std::vector<int>& cols() const { return blocks.front().cols; }
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Decoration {
  DecoTag tag;
  int m = 1;  // Trunc only
  static Decoration right() { return {DecoTag::Right}; }
  static Decoration left() { return {DecoTag::Left}; }
  static Decoration up() { return {DecoTag::Up}; }
  static Decoration down() { return {DecoTag::Down}; }
  static Decoration trunc(int m) { return {DecoTag::Trunc, m}; }
};

// The contiguous minor with x_ij in its upper-left corner (ignores the glued rule).
MinorSpec plain_spec(int N, int i, int j);
MinorSpec plain_spec(int N, const std::vector<int>& rows, const std::vector<int>& cols);
// The seed matrix at (i,j): glued when i = N+j-alpha (1<=j<=alpha) or j = N+i-beta (1<=i<=beta).
MinorSpec minor_spec(const BDTriple& t, int i, int j);

// Decorations apply left to right. Arrow decorations need a plain spec.
MinorSpec decorate(const MinorSpec& s, const std::vector<Decoration>& d);
PolyMatrix realize_matrix(const MinorSpec& s);
Polynomial realize(const MinorSpec& s, const std::vector<Decoration>& d = {});

// Shorthands for plain minors f_ij and their decorations.
Polynomial f(int N, int i, int j, const std::vector<Decoration>& d = {});
// g^{(m)} f_{1,beta+1} - g^{(m)->} f^{<-}_{1,beta+1}, with g the determinant of base
Polynomial glue_col_form(const BDTriple& t, const MinorSpec& base, int m);
Polynomial glue_col_form(const BDTriple& t, int i, int j, int m);  // base = plain f_ij
// g^{(m)} f_{alpha+1,1} - g^{(m)down} f^{up}_{alpha+1,1}
Polynomial glue_row_form(const BDTriple& t, const MinorSpec& base, int m);
Polynomial glue_row_form(const BDTriple& t, int i, int j, int m);

struct VertexInfo {
  Pos origin;
  Pos pos;
  int gen = 0;  // number of shifts applied
  bool frozen = false;
  bool alive = true;
  bool aux = false;  // the (1,1) slot carrying det X; frozen, never counted or exported
};

class FrozenVertex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int N) : N_(N) {}

  int N() const { return N_; }
  int add_vertex(Pos p, bool frozen, bool aux = false);
  std::size_t capacity() const { return v_.size(); }
  const VertexInfo& info(int id) const { return v_[id]; }
  std::vector<int> alive() const;    // ids, ordered by position row-major
  std::vector<int> visible() const;  // alive without the auxiliary vertex
  std::vector<int> mutable_ids() const;
  std::vector<int> frozen_ids() const;  // excludes the auxiliary vertex
  std::optional<int> at(Pos p) const;

  int b(int u, int v) const { return b_[std::size_t(u) * v_.size() + v]; }
  // Sets b(u,v)=w and b(v,u)=-w.
  void set(int u, int v, int w);
  void add_arrow(int u, int v) { set(u, v, b(u, v) + 1); }
  std::vector<int> neighbors(int u) const;

  void freeze(int id);
  void unfreeze(int id);  // keeps existing arrows
  void remove(int id);
  // Simultaneous moves; targets must be vacant after the sources are lifted.
  void relocate(const std::vector<std::pair<int, Pos>>& moves);
  void drop_frozen_arrows();
  bool has_standard_displacement(int u, int v) const;

 private:
  int N_ = 0;
  std::vector<VertexInfo> v_;
  std::vector<int> b_;
  std::map<Pos, int> pos_;
};

struct Seed {
  BDTriple triple;
  Quiver quiver;
  std::vector<Polynomial> fn;  // by vertex id

  const Polynomial& at(Pos p) const;
  int id(Pos p) const;
};

Seed build_initial_seed(const BDTriple& t);
// Initial quiver of the standard (trivial triple) structure.
Quiver standard_quiver(int N);

int rank_check(const Quiver& q);
bool nonconstancy_check(const Seed& s);
bool quiver_isomorphic(const Quiver& q1, const Quiver& q2, const std::map<int, int>& relabel);

// Arrows not present in the standard quiver are dashed.
std::string to_dot(const Quiver& q, const std::string& name = "Q");

}  // namespace bdc
