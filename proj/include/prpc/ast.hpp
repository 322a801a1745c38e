#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace prpc {

using Name = std::string;
using NameSet = std::set<Name>;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ------------------------------
// locations and kinds
// ------------------------------

struct Location {
    enum class Tag { Client, Server, Var };

    Tag tag = Tag::Client;
    Name name;  // nonempty iff tag == Var

    static Location client() { return Location{Tag::Client, {}}; }
    static Location server() { return Location{Tag::Server, {}}; }
    static Location var(Name n);

    bool isClient() const { return tag == Tag::Client; }
    bool isServer() const { return tag == Tag::Server; }
    bool isConst() const { return tag != Tag::Var; }
    bool isVar() const { return tag == Tag::Var; }

    bool operator==(const Location&) const = default;

    std::string show() const;
};

enum class Kind { Static, Dynamic };

std::string showKind(Kind k);

// ------------------------------
// types
// ------------------------------

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct BaseType {
    Name name;  // "int", "string", "unit", "base", or an opaque fixture name
};
struct ArrowType {
    TypePtr dom;
    Location loc;
    TypePtr cod;
};
struct TyVarType {
    Name name;
};
struct ForallTyType {
    Name tyvar;
    TypePtr body;
};
struct ForallLocType {
    Name locvar;
    Kind kind = Kind::Static;
    TypePtr body;
};
struct ProductType {
    TypePtr fst;
    TypePtr snd;
};

using TypeNode =
    std::variant<BaseType, ArrowType, TyVarType, ForallTyType, ForallLocType, ProductType>;

struct Type : TypeNode {
    using TypeNode::TypeNode;
};

TypePtr tBase(Name name);
TypePtr tArrow(TypePtr dom, Location loc, TypePtr cod);
TypePtr tTyVar(Name name);
TypePtr tForallTy(Name tyvar, TypePtr body);
TypePtr tForallLoc(Name locvar, Kind kind, TypePtr body);
TypePtr tProduct(TypePtr fst, TypePtr snd);

// ------------------------------
// terms
// ------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
    Name name;
};
struct Lam {
    Location loc;
    Name param;
    TypePtr paramType;
    TermPtr body;
};
struct App {
    TermPtr fun;
    TermPtr arg;
};
struct TyLam {
    Name tyvar;
    TermPtr body;  // value form
};
struct TyApp {
    TermPtr fun;
    TypePtr tyArg;
};
struct LocLam {
    Name locvar;
    Kind kind = Kind::Static;
    TermPtr body;  // value form
};
struct LocApp {
    TermPtr fun;
    Location locArg;
};
struct PairTerm {
    TermPtr fst;
    TermPtr snd;
};
struct Proj {
    int index;  // 1 or 2
    TermPtr arg;
};
struct ReqTerm {
    TermPtr fun;
    TermPtr arg;
};
struct CallTerm {
    TermPtr fun;
    TermPtr arg;
};
struct GenTerm {
    Location callee;
    TermPtr fun;
    TermPtr arg;
};
struct ConstTerm {
    std::variant<std::int64_t, std::string> value;
};
struct PrimTerm {
    std::string op;  // "+", "-", "*", "++"
    std::vector<TermPtr> args;
};
struct LetrecTerm {
    Name name;
    TypePtr type;
    TermPtr bound;  // value form
    TermPtr body;
};

using TermVariant = std::variant<Var, Lam, App, TyLam, TyApp, LocLam, LocApp, PairTerm, Proj,
                                 ReqTerm, CallTerm, GenTerm, ConstTerm, PrimTerm, LetrecTerm>;

struct Term : TermVariant {
    using TermVariant::TermVariant;
};

template <class T>
const T* as(const TermPtr& t) {
    return t ? std::get_if<T>(static_cast<const TermVariant*>(t.get())) : nullptr;
}
template <class T>
const T* as(const TypePtr& t) {
    return t ? std::get_if<T>(static_cast<const TypeNode*>(t.get())) : nullptr;
}
template <class T>
bool is(const TermPtr& t) {
    return as<T>(t) != nullptr;
}
template <class T>
bool is(const TypePtr& t) {
    return as<T>(t) != nullptr;
}

// `Λα.V`, `Λl.V`, and letrec bindings only admit value bodies; the
// constructors below throw std::invalid_argument on violations.
TermPtr mVar(Name name);
TermPtr mLam(Location loc, Name param, TypePtr paramType, TermPtr body);
TermPtr mApp(TermPtr fun, TermPtr arg);
TermPtr mTyLam(Name tyvar, TermPtr body);
TermPtr mTyApp(TermPtr fun, TypePtr tyArg);
TermPtr mLocLam(Name locvar, Kind kind, TermPtr body);
TermPtr mLocApp(TermPtr fun, Location locArg);
TermPtr mPair(TermPtr fst, TermPtr snd);
TermPtr mProj(int index, TermPtr arg);
TermPtr mReq(TermPtr fun, TermPtr arg);
TermPtr mCall(TermPtr fun, TermPtr arg);
TermPtr mGen(Location callee, TermPtr fun, TermPtr arg);
TermPtr mInt(std::int64_t v);
TermPtr mStr(std::string v);
TermPtr mPrim(std::string op, std::vector<TermPtr> args);
TermPtr mLetrec(Name name, TypePtr type, TermPtr bound, TermPtr body);

bool isValueForm(const TermPtr& t);

// Structural (not alpha) equality.
bool termEq(const TermPtr& a, const TermPtr& b);
bool typeEq(const TypePtr& a, const TypePtr& b);

// Fresh-name supply used for capture-avoiding renames. Single-threaded
// use per compilation pipeline; the counter itself is atomic.
Name freshName(const Name& base);

// ------------------------------
// typing environments
// ------------------------------

class TypeEnv {
public:
    TypeEnv() = default;

    TypeEnv withVar(Name x, TypePtr a) const;
    TypeEnv withTyVar(Name alpha) const;
    TypeEnv withLocVar(Name l) const;

    std::optional<TypePtr> lookupVar(const Name& x) const;
    bool hasTyVar(const Name& alpha) const;
    bool hasLocVar(const Name& l) const;

    const std::vector<std::pair<Name, TypePtr>>& termBindings() const { return termBindings_; }
    const std::vector<Name>& tyVars() const { return tyVars_; }
    const std::vector<Name>& locVars() const { return locVars_; }

    NameSet dom() const;
    std::vector<TypePtr> rng() const;

private:
    std::vector<std::pair<Name, TypePtr>> termBindings_;
    std::vector<Name> tyVars_;
    std::vector<Name> locVars_;
};

}  // namespace prpc
