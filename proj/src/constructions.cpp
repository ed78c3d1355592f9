#include "algkit/constructions.hpp"

namespace algkit {

namespace {

BilinearProduct sum3(const BilinearProduct& a, const BilinearProduct& b,
                     const BilinearProduct& c) {
  return combine({{1, a}, {1, b}, {1, c}});
}

BilinearProduct skew_pair(const BilinearProduct& a, const BilinearProduct& b) {
  // a - flip(b)
  return combine({{1, a}, {-1, flip(b)}});
}

}  // namespace

bool has_subadjacent(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::ns_commutative:
    case AlgebraKind::ns_lie:
    case AlgebraKind::ns_poisson:
    case AlgebraKind::ns_f_manifold:
    case AlgebraKind::ns_associative:
    case AlgebraKind::ns_pre_lie:
    case AlgebraKind::pre_poisson:
      return true;
    default:
      return false;
  }
}

AlgebraPresentation subadjacent(const AlgebraPresentation& a) {
  validate_presentation(a);
  std::map<std::string, BilinearProduct> prods;
  AlgebraKind target;
  switch (a.kind) {
    case AlgebraKind::ns_commutative: {
      target = AlgebraKind::commutative_associative;
      prods["dot"] = sum3(a.slot("star"), flip(a.slot("star")), a.slot("vee"));
      break;
    }
    case AlgebraKind::ns_lie: {
      target = AlgebraKind::lie;
      prods["bracket"] = combine(
          {{1, a.slot("diamond")}, {-1, flip(a.slot("diamond"))}, {1, a.slot("blackdiamond")}});
      break;
    }
    case AlgebraKind::ns_poisson:
    case AlgebraKind::ns_f_manifold: {
      target = a.kind == AlgebraKind::ns_poisson ? AlgebraKind::poisson
                                                 : AlgebraKind::f_manifold;
      prods["dot"] = sum3(a.slot("star"), flip(a.slot("star")), a.slot("vee"));
      prods["bracket"] = combine(
          {{1, a.slot("diamond")}, {-1, flip(a.slot("diamond"))}, {1, a.slot("blackdiamond")}});
      break;
    }
    case AlgebraKind::ns_associative: {
      target = AlgebraKind::associative;
      prods["dot"] = sum3(a.slot("prec"), a.slot("succ"), a.slot("vee"));
      break;
    }
    case AlgebraKind::ns_pre_lie: {
      target = AlgebraKind::ns_lie;
      prods["diamond"] = skew_pair(a.slot("rtri"), a.slot("ltri"));
      prods["blackdiamond"] = skew_pair(a.slot("circ"), a.slot("circ"));
      break;
    }
    case AlgebraKind::pre_poisson: {
      target = AlgebraKind::poisson;
      prods["dot"] = combine({{1, a.slot("star")}, {1, flip(a.slot("star"))}});
      prods["bracket"] = skew_pair(a.slot("diamond"), a.slot("diamond"));
      break;
    }
    default:
      throw structural_error("kind '" + kind_name(a.kind) +
                             "' has no subadjacent structure");
  }
  return make_presentation(target, a.space, std::move(prods), a.metadata);
}

AlgebraPresentation embed(const AlgebraPresentation& a, AlgebraKind target) {
  validate_presentation(a);
  const auto z = [&] { return zero_product(a.space); };
  std::map<std::string, BilinearProduct> prods;
  if (a.kind == AlgebraKind::zinbiel && target == AlgebraKind::ns_commutative) {
    prods["star"] = a.slot("star");
    prods["vee"] = z();
  } else if (a.kind == AlgebraKind::pre_lie && target == AlgebraKind::ns_lie) {
    prods["diamond"] = a.slot("diamond");
    prods["blackdiamond"] = z();
  } else if (a.kind == AlgebraKind::pre_poisson && target == AlgebraKind::ns_poisson) {
    prods["star"] = a.slot("star");
    prods["vee"] = z();
    prods["diamond"] = a.slot("diamond");
    prods["blackdiamond"] = z();
  } else if (a.kind == AlgebraKind::poisson && target == AlgebraKind::ns_poisson) {
    prods["star"] = z();
    prods["vee"] = a.slot("dot");
    prods["diamond"] = z();
    prods["blackdiamond"] = a.slot("bracket");
  } else if (a.kind == AlgebraKind::ns_commutative &&
             target == AlgebraKind::ns_associative) {
    // x succ y = y prec x = x star y
    prods["succ"] = a.slot("star");
    prods["prec"] = flip(a.slot("star"));
    prods["vee"] = a.slot("vee");
  } else if (a.kind == AlgebraKind::ns_associative && target == AlgebraKind::ns_pre_lie) {
    prods["rtri"] = a.slot("succ");
    prods["ltri"] = a.slot("prec");
    prods["circ"] = a.slot("vee");
  } else if (a.kind == AlgebraKind::zinbiel && target == AlgebraKind::l_dendriform) {
    prods["rtri"] = a.slot("star");
    prods["ltri"] = flip(a.slot("star"));
  } else if (a.kind == AlgebraKind::poisson && target == AlgebraKind::f_manifold) {
    prods["dot"] = a.slot("dot");
    prods["bracket"] = a.slot("bracket");
  } else {
    throw structural_error("unsupported embedding " + kind_name(a.kind) + " -> " +
                           kind_name(target));
  }
  return make_presentation(target, a.space, std::move(prods), a.metadata);
}

Vector hertling_manin_P(const AlgebraPresentation& a, const Vector& x, const Vector& y,
                        const Vector& z) {
  const auto& dot = a.slot("dot");
  const auto& br = a.slot("bracket");
  return eval_product(br, x, eval_product(dot, y, z)) -
         eval_product(dot, eval_product(br, x, y), z) -
         eval_product(dot, y, eval_product(br, x, z));
}

std::tuple<Vector, Vector, Vector> f_defects(const AlgebraPresentation& a, const Vector& x,
                                             const Vector& y, const Vector& z) {
  if (a.kind != AlgebraKind::ns_f_manifold && a.kind != AlgebraKind::ns_poisson)
    throw structural_error("f_defects needs the four NS product slots");
  const auto& star = a.slot("star");
  const auto& vee = a.slot("vee");
  const auto& dia = a.slot("diamond");
  const auto& bdia = a.slot("blackdiamond");
  const BilinearProduct odot = sum3(star, flip(star), vee);
  const BilinearProduct dcb = combine({{1, dia}, {-1, flip(dia)}, {1, bdia}});

  Vector f1 = eval_product(dia, x, eval_product(star, y, z)) -
              eval_product(star, y, eval_product(dia, x, z)) -
              eval_product(star, eval_product(dcb, x, y), z);
  Vector f2 = eval_product(star, x, eval_product(dia, y, z)) +
              eval_product(star, y, eval_product(dia, x, z)) -
              eval_product(dia, eval_product(odot, x, y), z);
  Vector f3 = eval_product(bdia, x, eval_product(odot, y, z)) +
              eval_product(dia, x, eval_product(vee, y, z)) -
              eval_product(star, z, eval_product(bdia, x, y)) -
              eval_product(star, y, eval_product(bdia, x, z)) -
              eval_product(vee, y, eval_product(dcb, x, z)) -
              eval_product(vee, eval_product(dcb, x, y), z);
  return {std::move(f1), std::move(f2), std::move(f3)};
}

std::pair<AlgebraPresentation, VerificationReport> sum_and_check_compatible(
    const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (a.kind != b.kind) throw structural_error("sum: presentations have different kinds");
  if (a.space != b.space) throw structural_error("sum: presentations have different spaces");
  std::map<std::string, BilinearProduct> prods;
  for (const auto& slot : kind_slots(a.kind))
    prods[slot] = combine({{1, a.slot(slot)}, {1, b.slot(slot)}});
  AlgebraPresentation sum = make_presentation(a.kind, a.space, std::move(prods),
                                              a.metadata.empty() ? b.metadata : a.metadata);
  VerificationReport report = verify_structure(sum);
  return {std::move(sum), std::move(report)};
}

}  // namespace algkit
