#include "largeness/rewrite.hpp"

#include <algorithm>
#include <limits>

#include "largeness/error.hpp"

namespace largeness {

namespace {

Substitution identity_images(std::size_t d) {
  Substitution s;
  for (std::size_t i = 0; i < d; ++i) s.emplace(i, Word::generator(i));
  return s;
}

std::string describe(const Substitution& images, const Alphabet& from, const Alphabet& to) {
  std::string out;
  for (const auto& [g, w] : images) {
    if (from.name(g) == (w.size() == 1 && w[0].sign == 1 ? to.name(w[0].gen) : std::string()))
      continue;
    if (!out.empty()) out += ", ";
    out += from.name(g) + " -> " + format_word(w, to);
  }
  return out.empty() ? "identity" : out;
}

std::string fresh_name(const Alphabet& alphabet, std::string base) {
  while (alphabet.find(base) != alphabet.size()) base += '_';
  return base;
}

}  // namespace

Presentation replay(const Presentation& p, const RewriteTrace& trace) {
  Presentation cur = p;
  for (const RewriteStep& step : trace.steps) {
    if (step.kind == RewriteStep::Kind::AddGenerator) {
      std::size_t g = cur.generators.add(step.generator);
      cur.relators.push_back(PowerRelator::make(step.definition * Word::generator(g, -1)));
    } else {
      for (auto& r : cur.relators) r = PowerRelator::make(substitute(r.root, step.images), r.power);
      cur.generators = step.alphabet;
    }
  }
  return cur;
}

RewriteResult triangularize(const Presentation& p) {
  const std::size_t d = p.rank();
  HermiteResult h = column_hermite(p.root_matrix());

  RewriteTrace trace;
  trace.source = p.generators;
  trace.target = p.generators;
  trace.forward = identity_images(d);
  trace.backward = identity_images(d);

  std::vector<Substitution> inverses;
  for (const ColumnOp& op : h.ops) {
    Substitution s = identity_images(d);
    Substitution inv = identity_images(d);
    switch (op.kind) {
      case ColumnOp::Kind::Swap:
        s[op.target] = Word::generator(op.source);
        s[op.source] = Word::generator(op.target);
        inv = s;
        break;
      case ColumnOp::Kind::AddMultiple: {
        // col[target] += q col[source]  <->  x_source -> x_source x_target^q
        if (!op.factor.fits_slong_p())
          throw Error(ErrorCode::DimensionMismatch, "column operation factor out of range");
        long q = op.factor.get_si();
        s[op.source] = Word::generator(op.source) * Word::generator(op.target).pow(q);
        inv[op.source] = Word::generator(op.source) * Word::generator(op.target).pow(-q);
        break;
      }
      case ColumnOp::Kind::Negate:
        s[op.target] = Word::generator(op.target, -1);
        inv = s;
        break;
    }
    RewriteStep step;
    step.kind = RewriteStep::Kind::Substitute;
    step.alphabet = p.generators;
    step.description = describe(s, p.generators, p.generators);
    step.images = std::move(s);
    for (auto& [g, w] : trace.forward) w = substitute(w, step.images);
    trace.steps.push_back(std::move(step));
    inverses.push_back(std::move(inv));
  }
  for (auto it = inverses.rbegin(); it != inverses.rend(); ++it)
    for (auto& [g, w] : trace.backward) w = substitute(w, *it);

  Presentation out = p;
  for (auto& r : out.relators) r = PowerRelator::make(substitute(r.root, trace.forward), r.power);
  return {std::move(out), std::move(trace)};
}

Word unit_word(const ZMap& phi) {
  // Running extended gcd: g = sum c_i phi_i over the generators seen so far.
  std::vector<Integer> coeff(phi.values.size(), 0);
  Integer g = 0;
  for (std::size_t i = 0; i < phi.values.size() && g != 1; ++i) {
    const Integer& a = phi.values[i];
    if (a == 0) continue;
    if (g == 0) {
      g = abs(a);
      coeff[i] = sgn(a);
      continue;
    }
    Integer ng, s, t;
    mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    for (std::size_t k = 0; k < i; ++k) coeff[k] *= s;
    coeff[i] = t;
    g = ng;
  }
  if (g != 1) throw Error(ErrorCode::InvalidZMap, "map is not surjective onto Z");
  Word w;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] == 0) continue;
    if (!coeff[i].fits_slong_p())
      throw Error(ErrorCode::InvalidZMap, "unit word exponent out of range");
    w *= Word::generator(i).pow(coeff[i].get_si());
  }
  return w;
}

ZMap t_coordinate(std::size_t y_count) {
  ZMap phi;
  phi.values.assign(y_count + 1, 0);
  phi.values.back() = 1;
  return phi;
}

RewriteResult normalize_to_t(const Presentation& p, const ZMap& phi) {
  validate_zmap(p, phi);
  const std::size_t d = p.rank();
  Word w = unit_word(phi);

  std::vector<std::int64_t> weight(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!phi.values[i].fits_slong_p())
      throw Error(ErrorCode::InvalidZMap, "map value out of range");
    weight[i] = phi.values[i].get_si();
  }

  Alphabet target;
  for (std::size_t i = 0; i < d; ++i) target.add("y" + std::to_string(i + 1));
  const std::size_t t = target.add("t");
  const Word tw = Word::generator(t);

  RewriteTrace trace;
  trace.source = p.generators;
  trace.target = target;

  RewriteStep add;
  add.kind = RewriteStep::Kind::AddGenerator;
  add.generator = fresh_name(p.generators, "t");
  add.definition = w;
  add.description = "add " + add.generator + " = " + format_word(w, p.generators);

  Alphabet widened = p.generators;
  widened.add(add.generator);
  RewriteStep sub;
  sub.kind = RewriteStep::Kind::Substitute;
  sub.alphabet = target;
  for (std::size_t i = 0; i < d; ++i) {
    Word img = Word::generator(i) * tw.pow(weight[i]);
    sub.images.emplace(i, img);
    trace.forward.emplace(i, img);
  }
  sub.images.emplace(d, tw);
  sub.description = describe(sub.images, widened, target);
  trace.steps.push_back(std::move(add));
  trace.steps.push_back(std::move(sub));

  for (std::size_t i = 0; i < d; ++i)
    trace.backward.emplace(i, Word::generator(i) * w.pow(-weight[i]));
  trace.backward.emplace(t, w);

  Presentation q;
  q.generators = target;
  for (const auto& r : p.relators)
    q.relators.push_back(PowerRelator::make(substitute(r.root, trace.forward), r.power));
  q.relators.push_back(PowerRelator::make(substitute(w, trace.forward) * tw.inverse()));
  return {std::move(q), std::move(trace)};
}

Integer delta(std::span<const Letter> letters, const ZMap& phi) {
  Integer height = 0, best = 0;
  for (const Letter& l : letters) {
    if (l.sign > 0)
      height += phi.values.at(l.gen);
    else
      height -= phi.values.at(l.gen);
    if (abs(height) > best) best = abs(height);
  }
  return best;
}

Integer delta(const Word& w, const ZMap& phi) { return delta(w.letters(), phi); }

std::size_t stable_letter(const ZMap& phi) {
  std::size_t t = phi.values.size();
  for (std::size_t i = 0; i < phi.values.size(); ++i) {
    if (phi.values[i] == 0) continue;
    if (phi.values[i] != 1 || t != phi.values.size())
      throw Error(ErrorCode::InvalidZMap, "conjugate rewriting needs phi(t) = 1 and phi = 0 elsewhere");
    t = i;
  }
  if (t == phi.values.size())
    throw Error(ErrorCode::InvalidZMap, "conjugate rewriting needs a generator with phi = 1");
  return t;
}

ConjugateWord conjugate_rewrite(const Word& r, const ZMap& phi) {
  const std::size_t t = stable_letter(phi);
  std::int64_t height = 0;
  ConjugateWord out;
  for (const Letter& l : r.letters()) {
    if (l.gen == t)
      height += l.sign;
    else
      out.push_back({l.gen, height, l.sign});
  }
  if (height != 0)
    throw Error(ErrorCode::NonzeroTSum,
                "t-exponent sum is " + std::to_string(height) + ", not 0");
  return out;
}

Word expand(const ConjugateWord& cw, std::size_t t_index) {
  Word out;
  const Word t = Word::generator(t_index);
  for (const auto& c : cw) out *= t.pow(c.height) * Word::generator(c.gen, c.sign) * t.pow(-c.height);
  return out;
}

std::string format_conjugate_word(const ConjugateWord& cw, const Alphabet& alphabet) {
  if (cw.empty()) return "1";
  std::string out;
  for (const auto& c : cw) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(c.gen) + "_{" + std::to_string(c.height) + "}";
    if (c.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace largeness
