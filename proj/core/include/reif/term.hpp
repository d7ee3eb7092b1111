#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reif {

using VarId = std::uint32_t;
using AtomId = std::uint32_t;
using FunctorId = std::uint32_t;

// ---------------------------------------------------------------------------
// Term: an immutable logic term with value semantics.
//
// This is the exchange format between the engine and the outside world:
// the parser produces Terms, answers carry Terms, tests build Terms.  The
// machine itself works on the packed `Ref` representation below.
// ---------------------------------------------------------------------------
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Atom, Int, Compound };

  Term() : Term(Kind::Atom, 0, "[]") {}

  static Term var(VarId id, std::string name = {}) {
    return Term(Kind::Var, id, std::move(name));
  }
  static Term atom(std::string name) { return Term(Kind::Atom, 0, std::move(name)); }
  static Term integer(std::int64_t value) { return Term(Kind::Int, value, {}); }
  /// A zero-argument compound is normalised to an atom.
  static Term compound(std::string functor, std::vector<Term> args);
  static Term nil() { return atom("[]"); }
  static Term list(std::vector<Term> items, Term tail = nil());
  static Term pair(Term key, Term value);

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::Var; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_compound() const { return kind_ == Kind::Compound; }
  bool is_atom(std::string_view name) const { return is_atom() && name_ == name; }
  bool is_callable() const { return is_atom() || is_compound(); }
  bool is_functor(std::string_view name, std::size_t arity) const {
    return is_compound() && args_.size() == arity && name_ == name;
  }

  VarId var_id() const { return static_cast<VarId>(num_); }
  std::int64_t value() const { return num_; }
  /// Atom name, compound functor name, or variable display name.
  const std::string& name() const { return name_; }
  std::span<const Term> args() const { return args_; }
  const Term& arg(std::size_t i) const { return args_[i]; }
  std::size_t arity() const { return args_.size(); }

  void set_name(std::string name) { name_ = std::move(name); }
  std::vector<Term>& mutable_args() { return args_; }

  /// Structural equality; variables compare by id.
  friend bool operator==(const Term& a, const Term& b);

 private:
  Term(Kind kind, std::int64_t num, std::string name)
      : kind_(kind), num_(num), name_(std::move(name)) {}

  Kind kind_;
  std::int64_t num_ = 0;
  std::string name_;
  std::vector<Term> args_;
};

/// True if the terms are equal up to a consistent, bijective renaming of
/// variables (variables are matched by display name when ids differ).
bool is_variant(const Term& a, const Term& b);

/// Standard order of terms: Var < Int < Atom < Compound; compounds by
/// arity, then name, then arguments left to right.  Variables order by
/// display name, then id.
int compare_terms(const Term& a, const Term& b);

// ---------------------------------------------------------------------------
// Ref: the machine word.  Low three bits hold the tag.
// ---------------------------------------------------------------------------
class Ref {
 public:
  enum class Tag : std::uint8_t { Var = 0, Atom = 1, Int = 2, Str = 3, Functor = 4 };

  static constexpr std::int64_t kMinInt = -(std::int64_t{1} << 60);
  static constexpr std::int64_t kMaxInt = (std::int64_t{1} << 60) - 1;

  constexpr Ref() = default;

  static constexpr Ref var(VarId id) { return Ref(pack(id, Tag::Var)); }
  static constexpr Ref atom(AtomId id) { return Ref(pack(id, Tag::Atom)); }
  static constexpr Ref integer(std::int64_t v) {
    return Ref((static_cast<std::uint64_t>(v) << 3) | static_cast<std::uint64_t>(Tag::Int));
  }
  /// Compound term whose functor cell lives at `heap_index`.
  static constexpr Ref str(std::uint32_t heap_index) { return Ref(pack(heap_index, Tag::Str)); }
  /// Functor cell; the arity is packed alongside so the heap is
  /// self-describing.
  static constexpr Ref functor(FunctorId f, std::uint32_t arity) {
    return Ref(pack(f, Tag::Functor) | (static_cast<std::uint64_t>(arity) << 35));
  }

  constexpr Tag tag() const { return static_cast<Tag>(bits_ & 7u); }
  constexpr bool is_var() const { return tag() == Tag::Var; }
  constexpr bool is_atom() const { return tag() == Tag::Atom; }
  constexpr bool is_int() const { return tag() == Tag::Int; }
  constexpr bool is_str() const { return tag() == Tag::Str; }
  constexpr bool is_functor() const { return tag() == Tag::Functor; }
  constexpr bool is_atomic() const { return is_atom() || is_int(); }

  constexpr std::uint32_t index() const { return static_cast<std::uint32_t>(bits_ >> 3); }
  constexpr std::uint32_t functor_arity() const { return static_cast<std::uint32_t>(bits_ >> 35); }
  constexpr std::int64_t int_value() const { return static_cast<std::int64_t>(bits_) >> 3; }
  constexpr std::uint64_t bits() const { return bits_; }

  friend constexpr bool operator==(Ref a, Ref b) { return a.bits_ == b.bits_; }

 private:
  explicit constexpr Ref(std::uint64_t bits) : bits_(bits) {}
  static constexpr std::uint64_t pack(std::uint32_t payload, Tag tag) {
    return (static_cast<std::uint64_t>(payload) << 3) | static_cast<std::uint64_t>(tag);
  }

  std::uint64_t bits_ = 0;
};

// ---------------------------------------------------------------------------
// Symbols: interned atoms and name/arity functors.
// ---------------------------------------------------------------------------
class Symbols {
 public:
  // Pre-interned atoms, in interning order.
  static constexpr AtomId kNil = 0;
  static constexpr AtomId kTrue = 1;
  static constexpr AtomId kFalse = 2;
  static constexpr AtomId kDot = 3;
  static constexpr AtomId kMinus = 4;
  static constexpr AtomId kTreeNode = 5;
  static constexpr AtomId kEquals = 6;
  static constexpr AtomId kDif = 7;
  static constexpr AtomId kComma = 8;
  static constexpr AtomId kSemicolon = 9;
  static constexpr AtomId kCall = 10;
  static constexpr AtomId kIf = 11;
  static constexpr AtomId kFail = 12;
  static constexpr AtomId kOnce = 13;

  // Pre-interned functors.
  static constexpr FunctorId kList = 0;   // '.'/2
  static constexpr FunctorId kPair = 1;   // '-'/2
  static constexpr FunctorId kTree = 2;   // t/3
  static constexpr FunctorId kEq2 = 3;    // '='/2
  static constexpr FunctorId kEq3 = 4;    // '='/3
  static constexpr FunctorId kDif2 = 5;   // dif/2

  Symbols();

  AtomId intern(std::string_view name);
  std::optional<AtomId> find(std::string_view name) const;
  const std::string& name(AtomId id) const { return atoms_[id]; }
  std::size_t atom_count() const { return atoms_.size(); }

  FunctorId functor(AtomId name, std::uint32_t arity);
  FunctorId functor(std::string_view name, std::uint32_t arity) { return functor(intern(name), arity); }
  std::optional<FunctorId> find_functor(AtomId name, std::uint32_t arity) const;
  AtomId functor_name(FunctorId f) const { return functors_[f].name; }
  std::uint32_t functor_arity(FunctorId f) const { return functors_[f].arity; }
  std::size_t functor_count() const { return functors_.size(); }

  /// "name/arity", for messages.
  std::string indicator(FunctorId f) const;

 private:
  struct FunctorEntry {
    AtomId name;
    std::uint32_t arity;
  };
  static std::uint64_t functor_key(AtomId name, std::uint32_t arity) {
    return (static_cast<std::uint64_t>(name) << 32) | arity;
  }

  std::vector<std::string> atoms_;
  std::unordered_map<std::string, AtomId> atom_index_;
  std::vector<FunctorEntry> functors_;
  std::unordered_map<std::uint64_t, FunctorId> functor_index_;
};

// ---------------------------------------------------------------------------
// Trail
// ---------------------------------------------------------------------------
enum class TrailKind : std::uint8_t {
  Bind,         // a: var id
  DifAdded,     // a: disequation id
  DifKilled,    // a: disequation id
  DifPending,   // a: disequation id (old pending saved by the store)
  WatchAdded,   // a: var id
};

struct TrailEntry {
  TrailKind kind;
  std::uint32_t a;
};

/// Receives non-binding trail entries while the trail is unwound.
class TrailListener {
 public:
  virtual void undo(const TrailEntry& entry) = 0;

 protected:
  ~TrailListener() = default;
};

/// A compiled term with clause-local variable numbering: `Str` refs index
/// into `cells`, `Var` refs are local indices below `var_count`.
struct TermTemplate {
  std::vector<Ref> cells;
  std::uint32_t var_count = 0;
};

// ---------------------------------------------------------------------------
// Bindings: heap, variable cells and trail.
// ---------------------------------------------------------------------------
class Bindings {
 public:
  struct Mark {
    std::uint32_t trail = 0;
    std::uint32_t heap = 0;
    std::uint32_t vars = 0;
  };

  VarId new_var() {
    const auto id = static_cast<VarId>(vars_.size());
    vars_.push_back(Ref::var(id));
    return id;
  }

  Ref deref(Ref t) const {
    while (t.is_var()) {
      const Ref next = vars_[t.index()];
      if (next == t) break;
      t = next;
    }
    return t;
  }

  bool is_unbound(VarId v) const { return vars_[v] == Ref::var(v); }
  Ref value_of(VarId v) const { return vars_[v]; }

  /// Binds an unbound variable and records it on the trail.
  void bind(VarId v, Ref value) {
    vars_[v] = value;
    trail_.push_back({TrailKind::Bind, v});
  }

  void push_trail(TrailEntry e) { trail_.push_back(e); }

  FunctorId functor_of(Ref str) const { return heap_[str.index()].index(); }
  std::uint32_t arity_of(Ref str) const { return heap_[str.index()].functor_arity(); }
  Ref arg(Ref str, std::uint32_t i) const { return heap_[str.index() + 1 + i]; }

  Ref make_struct(FunctorId f, std::span<const Ref> args);
  Ref heap_cell(std::uint32_t i) const { return heap_[i]; }

  /// Copies a template onto the heap with fresh variables; returns the
  /// offsets used to translate template refs (see `resolve`).
  struct Frame {
    std::uint32_t var_base = 0;
    std::uint32_t heap_base = 0;
  };
  Frame instantiate(const TermTemplate& tmpl);

  static Ref resolve(Ref t, Frame f) {
    switch (t.tag()) {
      case Ref::Tag::Var: return Ref::var(t.index() + f.var_base);
      case Ref::Tag::Str: return Ref::str(t.index() + f.heap_base);
      default: return t;
    }
  }

  Mark mark() const {
    return {static_cast<std::uint32_t>(trail_.size()), static_cast<std::uint32_t>(heap_.size()),
            static_cast<std::uint32_t>(vars_.size())};
  }

  /// Unwinds the trail to `m.trail`, handing non-binding entries to
  /// `listener`, then discards heap cells and variables created after `m`.
  void undo_to(const Mark& m, TrailListener* listener);

  /// Unwinds only the trail (heap and variables are kept).
  void undo_trail_to(std::uint32_t trail_mark, TrailListener* listener);

  std::span<const TrailEntry> trail_since(std::uint32_t mark) const {
    return std::span<const TrailEntry>(trail_).subspan(mark);
  }

  std::size_t var_count() const { return vars_.size(); }
  std::size_t heap_size() const { return heap_.size(); }
  std::size_t trail_size() const { return trail_.size(); }

  bool occurs_check() const { return occurs_check_; }
  void set_occurs_check(bool on) { occurs_check_ = on; }

  /// Hash of the variable cells (hence of the substitution).
  std::uint64_t hash() const;

  void clear() {
    heap_.clear();
    vars_.clear();
    trail_.clear();
  }

  /// Scratch stack shared by the unifier and term walkers.
  std::vector<Ref>& scratch() { return scratch_; }

 private:
  std::vector<Ref> heap_;
  std::vector<Ref> vars_;
  std::vector<TrailEntry> trail_;
  std::vector<Ref> scratch_;
  bool occurs_check_ = false;
};

// ---------------------------------------------------------------------------
// Conversions and queries
// ---------------------------------------------------------------------------

/// Maps Term variable ids to machine variables while importing.
using ImportMap = std::unordered_map<VarId, VarId>;

/// Builds `t` on the heap.  Term variables are mapped through `vars`,
/// allocating fresh machine variables for ids not yet present.
Ref import_term(const Term& t, Bindings& b, Symbols& syms, ImportMap& vars);

/// `t` with every bound variable recursively replaced by its binding.
/// Unbound variables are returned as Term vars carrying the machine id.
Term walk_star(Ref t, const Bindings& b, const Symbols& syms);

/// True iff both terms are structurally equal after dereferencing, with
/// variables equal only to themselves.
bool term_identical(Ref a, Ref b, const Bindings& bindings);

/// Unbound variables of `t` in depth-first, left-to-right first-occurrence
/// order, without duplicates.
std::vector<VarId> term_variables(Ref t, const Bindings& b);

/// Appends the unbound variables of `t` not already in `out`.
void collect_variables(Ref t, const Bindings& b, std::vector<VarId>& out);

}  // namespace reif
