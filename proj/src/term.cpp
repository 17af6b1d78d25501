// Copyright 2026 The omegarep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "omegarep/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "omegarep/algebra.hpp"
#include "omegarep/representation.hpp"

namespace omegarep {

namespace {
std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace

Term Term::make(Kind kind, std::size_t index, std::string op, std::vector<Term> args) {
  std::size_t depth = 0;
  std::size_t h = mix(static_cast<std::size_t>(kind), index);
  for (const auto& a : args) {
    depth = std::max(depth, a.depth() + 1);
    h = mix(h, a.hash());
  }
  return Term(std::make_shared<const Node>(
      Node{kind, index, std::move(op), std::move(args), depth, h}));
}

Term Term::generator(std::size_t index) { return make(Kind::Generator, index, {}, {}); }

Term Term::apply(const Signature& sig, std::string_view op, std::vector<Term> args) {
  return apply(sig, sig.index_of(op), std::move(args));
}

Term Term::apply(const Signature& sig, std::size_t op_index, std::vector<Term> args) {
  if (op_index >= sig.size()) {
    throw Error(ErrorKind::UnknownOp, "op index " + std::to_string(op_index) + " out of range");
  }
  const OpDecl& decl = sig.op(op_index);
  if (args.size() != decl.arity) {
    throw Error(ErrorKind::UnknownOp, "'" + decl.name + "' expects " + std::to_string(decl.arity) +
                                          " arguments, got " + std::to_string(args.size()));
  }
  return make(Kind::Apply, op_index, decl.name, std::move(args));
}

Term Term::act(Element actor, Term arg) {
  std::vector<Term> args;
  args.push_back(std::move(arg));
  return make(Kind::Act, actor, {}, std::move(args));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.index() != b.index() || a.op() != b.op() ||
      a.node_->args.size() != b.node_->args.size()) {
    return false;
  }
  return std::equal(a.node_->args.begin(), a.node_->args.end(), b.node_->args.begin());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.depth() <=> b.depth(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.index() <=> b.index(); c != 0) return c;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.node_->args.begin(), a.node_->args.end(),
                                                b.node_->args.begin(), b.node_->args.end());
}

std::string to_string(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::Generator:
      return "g" + std::to_string(term.index());
    case Term::Kind::Act:
      return "@" + std::to_string(term.index()) + "(" + to_string(term.args()[0]) + ")";
    case Term::Kind::Apply: {
      std::string s = term.op() + "(";
      for (std::size_t i = 0; i < term.args().size(); ++i) {
        if (i) s += ",";
        s += to_string(term.args()[i]);
      }
      return s + ")";
    }
  }
  return {};
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::size_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  Term term() {
    skip_ws();
    if (eat('@')) {
      Element actor = static_cast<Element>(number());
      expect('(');
      Term arg = term();
      expect(')');
      return Term::act(actor, std::move(arg));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a term");
    std::string_view ident = text_.substr(start, pos_ - start);
    if (eat('(')) {
      std::vector<Term> args;
      if (!eat(')')) {
        do {
          args.push_back(term());
        } while (eat(','));
        expect(')');
      }
      return Term::apply(sig_, ident, std::move(args));
    }
    if (ident.size() > 1 && ident[0] == 'g' &&
        std::all_of(ident.begin() + 1, ident.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return Term::generator(std::stoull(std::string(ident.substr(1))));
    }
    pos_ = start;
    fail("unknown token '" + std::string(ident) + "'");
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) { return TermParser(text, sig).parse(); }

Element eval_term(const FiniteAlgebra& alg, const Term& term, std::span<const Element> gens,
                  const Representation* rep) {
  switch (term.kind()) {
    case Term::Kind::Generator:
      if (term.index() >= gens.size()) {
        throw Error(ErrorKind::GeneratorOutOfRange,
                    "generator g" + std::to_string(term.index()) + " with only " +
                        std::to_string(gens.size()) + " assigned");
      }
      return gens[term.index()];
    case Term::Kind::Apply: {
      std::size_t op = alg.signature().index_of(term.op());
      if (alg.signature().op(op).arity != term.args().size()) {
        throw Error(ErrorKind::UnknownOp, "arity of '" + term.op() + "' differs in the algebra");
      }
      Tuple args;
      args.reserve(term.args().size());
      for (const auto& a : term.args()) args.push_back(eval_term(alg, a, gens, rep));
      return alg.apply(op, args);
    }
    case Term::Kind::Act: {
      if (rep == nullptr) {
        throw Error(ErrorKind::ActWithoutRepresentation, "term " + to_string(term) + " acts");
      }
      if (term.index() >= rep->actor().size()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "actor element " + std::to_string(term.index()) + " out of range");
      }
      Element x = eval_term(alg, term.args()[0], gens, rep);
      return rep->action(static_cast<Element>(term.index()))(x);
    }
  }
  return kUndefined;
}

std::vector<Term> enumerate_terms(const Signature& sig, std::size_t generator_count,
                                  std::size_t action_count, std::size_t depth,
                                  std::size_t budget) {
  std::vector<Term> all;
  auto charge = [&](std::size_t extra) {
    if (all.size() + extra > budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "term enumeration passed the budget of " + std::to_string(budget));
    }
  };

  for (std::size_t g = 0; g < generator_count; ++g) {
    charge(1);
    all.push_back(Term::generator(g));
  }
  for (std::size_t op = 0; op < sig.size(); ++op) {
    if (sig.op(op).arity == 0) {
      charge(1);
      all.push_back(Term::apply(sig, op, {}));
    }
  }

  // Terms of depth exactly d have at least one child of depth exactly d-1.
  std::size_t prev_begin = 0;
  for (std::size_t d = 1; d <= depth; ++d) {
    const std::size_t prev_end = all.size();
    if (prev_begin == prev_end) break;
    std::vector<Term> fresh;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t arity = sig.op(op).arity;
      if (arity == 0) continue;
      Tuple idx(arity, 0);
      do {
        bool has_last_level = std::any_of(idx.begin(), idx.end(),
                                          [&](Element i) { return i >= prev_begin; });
        if (!has_last_level) continue;
        charge(fresh.size() + 1);
        std::vector<Term> args;
        args.reserve(arity);
        for (Element i : idx) args.push_back(all[i]);
        fresh.push_back(Term::apply(sig, op, std::move(args)));
      } while (next_tuple(idx, prev_end));
    }
    for (std::size_t c = 0; c < action_count; ++c) {
      for (std::size_t i = prev_begin; i < prev_end; ++i) {
        charge(fresh.size() + 1);
        fresh.push_back(Term::act(static_cast<Element>(c), all[i]));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    prev_begin = prev_end;
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
  return all;
}

}  // namespace omegarep
