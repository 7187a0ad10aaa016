#include "dcf/embed.hpp"

#include "dcf/factor.hpp"
#include "dcf/linalg.hpp"
#include "dcf/subfield.hpp"

namespace dcf {

LazyFieldMap::LazyFieldMap(std::shared_ptr<ClosurePresentation> source, std::shared_ptr<ClosurePresentation> target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_->base() == target_->base())) throw Error(ErrorKind::Domain, "domain mismatch: different base fields");
}

std::vector<TowerElement> LazyFieldMap::images() const {
  std::vector<TowerElement> out;
  out.reserve(log_.size());
  for (const auto& a : log_) out.push_back(a.image);
  return out;
}

Polynomial LazyFieldMap::transported_minpoly(std::size_t level) {
  const TowerField& src = source_->field();
  const Polynomial m(src.at_level(level - 1), src.generator(level).minpoly);
  return map_coefficients(m, images(), target_->field());
}

void LazyFieldMap::assign_given(const TowerElement& image) {
  const std::size_t level = log_.size() + 1;
  const TowerField& src = source_->field();
  if (level > src.level()) throw Error(ErrorKind::Domain, "more generator images than generators");
  if (!image.field().is_prefix_of(target_->field()))
    throw Error(ErrorKind::Domain, "generator image is not an element of the target");
  const Polynomial q = transported_minpoly(level);
  if (!q.eval(image).is_zero())
    throw Error(ErrorKind::NotAutomorphism, "not a homomorphism: the image of " + src.generator(level).name +
                                                " does not satisfy its transported minimal polynomial");
  log_.push_back({level, src.generator(level).name, image.lift_to(target_->field()), "given", false});
}

void LazyFieldMap::assign_next() {
  const std::size_t level = log_.size() + 1;
  const Generator gen = source_->field().generator(level);
  if (gen.insep_exp > 0) {
    // Minimal polynomial X^(p^k) - a: the image is the unique p^k-th root of
    // the image of a.
    const TowerField below = source_->field().at_level(level - 1);
    const TowerElement a(below, below.neg(gen.minpoly[0]));
    const TowerElement image_a = substitute_generators(a, images(), target_->field());
    const TowerElement img = target_->pk_root(image_a, gen.insep_exp);
    log_.push_back({level, gen.name, img, "inseparable", true});
    return;
  }
  const Polynomial q = transported_minpoly(level);
  const TowerElement img = target_->adjoin_root(q);
  if (!q.eval(img).is_zero()) throw Error(ErrorKind::Internal, "target root does not satisfy the transported polynomial");
  log_.push_back({level, gen.name, img, "separable", false});
}

TowerElement LazyFieldMap::image(const TowerElement& x) {
  if (!x.field().is_prefix_of(source_->field()))
    throw Error(ErrorKind::Domain, "element is not in the source presentation");
  while (log_.size() < x.field().level()) assign_next();
  return substitute_generators(x, images(), target_->field());
}

Polynomial LazyFieldMap::image(const Polynomial& f) {
  if (!f.field().is_prefix_of(source_->field()))
    throw Error(ErrorKind::Domain, "polynomial is not over the source presentation");
  while (log_.size() < f.field().level()) assign_next();
  return map_coefficients(f, images(), target_->field());
}

bool is_automorphism(const TowerField& F, const std::vector<TowerElement>& sigma) {
  if (sigma.size() != F.level()) throw Error(ErrorKind::Domain, "expected one image per generator");
  for (const auto& s : sigma)
    if (!s.field().is_prefix_of(F)) throw Error(ErrorKind::Domain, "generator image lies outside the field");
  for (std::size_t l = 1; l <= F.level(); ++l) {
    const Polynomial m(F.at_level(l - 1), F.generator(l).minpoly);
    if (!map_coefficients(m, sigma, F).eval(sigma[l - 1]).is_zero()) return false;
  }
  SpanBasis span(F.base(), F.degree());
  for (std::size_t i = 0; i < F.degree(); ++i) {
    Residue e = F.zero();
    e[i] = F.base().one();
    if (!span.insert(substitute_generators(TowerElement(F, e), sigma, F).value())) return false;
  }
  return true;
}

bool is_normal(const TowerField& F) {
  for (std::size_t l = 1; l <= F.level(); ++l) {
    const Polynomial m = minpoly_over_level(TowerElement::generator(F, l), 0);
    for (const auto& [g, e] : factor(m, F).factors)
      if (*g.degree() != 1) return false;
  }
  return true;
}

LazyFieldMap extend_embedding(const TowerField& F, const std::vector<TowerElement>& alpha,
                              std::shared_ptr<ClosurePresentation> K) {
  return extend_embedding(std::make_shared<ClosurePresentation>(F), F, alpha, std::move(K));
}

LazyFieldMap extend_embedding(std::shared_ptr<ClosurePresentation> source, const TowerField& F,
                              const std::vector<TowerElement>& alpha, std::shared_ptr<ClosurePresentation> K) {
  if (!(F.base() == K->base())) throw Error(ErrorKind::Domain, "domain mismatch: different base fields");
  source->ensure_contains(F);
  if (alpha.size() != F.level()) throw Error(ErrorKind::Domain, "expected one image per generator of the field");
  LazyFieldMap m(std::move(source), std::move(K));
  for (const auto& a : alpha) m.assign_given(a);
  return m;
}

LazyFieldMap extend_automorphism(const TowerField& E, const std::vector<TowerElement>& sigma,
                                 std::shared_ptr<ClosurePresentation> C) {
  const TowerField Ec = C->ensure_contains(E);
  std::vector<TowerElement> s;
  for (const auto& x : sigma) {
    if (x.field().is_prefix_of(Ec)) {
      s.push_back(x.lift_to(Ec));
    } else if (x.field().level() <= E.level() && E.at_level(x.field().level()).same_structure(x.field())) {
      s.emplace_back(Ec, Ec.lift(x.value()));
    } else {
      throw Error(ErrorKind::Domain, "automorphism image lies outside the field");
    }
  }
  if (!is_normal(Ec)) throw Error(ErrorKind::NotNormal, "the field is not normal over its base");
  if (!is_automorphism(Ec, s)) throw Error(ErrorKind::NotAutomorphism, "sigma is not an automorphism of the field");
  LazyFieldMap m(C, C);
  for (const auto& x : s) m.assign_given(x);
  return m;
}

}  // namespace dcf
