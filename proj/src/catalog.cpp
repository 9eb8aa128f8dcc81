#include "gmd/catalog.hpp"

#include <sstream>

#include "gmd/errors.hpp"

namespace gmd {

namespace {

Mat5 diag(const Rational &a1, const Rational &a2, const Rational &a3,
          const Rational &a4, const Rational &a5) {
  Mat5 m{};
  m[0][0] = a1;
  m[1][1] = a2;
  m[2][2] = a3;
  m[3][3] = a4;
  m[4][4] = a5;
  return m;
}

// Adds s*E_ij (1-based, as in the table).
Mat5 plusE(Mat5 m, int i, int j, const Rational &s = 1) {
  m[i - 1][j - 1] += s;
  return m;
}

// (s, S_ab, S_cd): scalar on X1, blocks on (X2,X3) and (X4,X5).
Mat5 blocks(const Rational &s, const Rational &a, const Rational &b,
            const Rational &c, const Rational &d) {
  Mat5 m{};
  m[0][0] = s;
  m[1][1] = a;
  m[1][2] = b;
  m[2][1] = -b;
  m[2][2] = a;
  m[3][3] = c;
  m[3][4] = d;
  m[4][3] = -d;
  m[4][4] = c;
  return m;
}

Rational val(const std::optional<Rational> &r) { return r ? *r : Rational(0); }

} // namespace

std::string to_string(FamilyId id) { return "G" + std::to_string(static_cast<int>(id)); }

std::optional<FamilyId> parse_family(const std::string &s) {
  if (s.size() < 2 || (s[0] != 'G' && s[0] != 'g'))
    return std::nullopt;
  try {
    std::size_t pos = 0;
    const int n = std::stoi(s.substr(1), &pos);
    if (pos != s.size() - 1 || n < 1 || n > NUM_FAMILIES)
      return std::nullopt;
    return static_cast<FamilyId>(n);
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

std::vector<FamilyId> all_families() {
  std::vector<FamilyId> v;
  for (int i = 1; i <= NUM_FAMILIES; ++i)
    v.push_back(static_cast<FamilyId>(i));
  return v;
}

ClassTag class_of(FamilyId id) {
  return static_cast<int>(id) <= 12 ? ClassTag::A1 : ClassTag::A2;
}

const char *to_string(ClassTag t) { return t == ClassTag::A1 ? "A1" : "A2"; }

ParamShape param_shape(FamilyId id) {
  switch (id) {
  case FamilyId::G1:
  case FamilyId::G6:
  case FamilyId::G8:
  case FamilyId::G10:
  case FamilyId::G12:
  case FamilyId::G13:
  case FamilyId::G16:
    return {true, false};
  case FamilyId::G4:
  case FamilyId::G14:
    return {false, true};
  default:
    return {};
  }
}

std::string describe(const FamilyParams &p) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const char *name, const std::optional<Rational> &r) {
    if (!r)
      return;
    if (!first)
      os << ", ";
    os << name << "=" << r->convert_to<double>();
    first = false;
  };
  put("λ", p.lambda);
  put("λ1", p.lambda1);
  put("λ2", p.lambda2);
  return os.str();
}

std::vector<std::string> conditions(FamilyId id) {
  switch (id) {
  case FamilyId::G1:
    return {"λ ∈ {0,1}"};
  case FamilyId::G4:
    return {"(λ1,λ2) ≠ (−1,0)", "λ1+1 ≠ λ2"};
  case FamilyId::G6:
  case FamilyId::G8:
  case FamilyId::G10:
    return {"λ ∈ R"};
  case FamilyId::G12:
    return {"λ ∈ R \\ {−1}"};
  case FamilyId::G13:
  case FamilyId::G16:
    return {"λ ≥ 0"};
  case FamilyId::G14:
    return {"λ2 ≥ 0", "λ1 ≠ −1"};
  default:
    return {};
  }
}

std::optional<std::string> validate_params(FamilyId id, const FamilyParams &p) {
  const ParamShape shape = param_shape(id);
  if (shape.lambda && !p.lambda)
    return "missing parameter λ";
  if (shape.lambda12 && (!p.lambda1 || !p.lambda2))
    return "missing parameters λ1, λ2";
  if (!shape.lambda && p.lambda)
    return "unexpected parameter λ";
  if (!shape.lambda12 && (p.lambda1 || p.lambda2))
    return "unexpected parameters λ1, λ2";

  const auto c = conditions(id);
  switch (id) {
  case FamilyId::G1:
    if (*p.lambda != 0 && *p.lambda != 1)
      return c[0];
    break;
  case FamilyId::G4:
    if (*p.lambda1 == -1 && *p.lambda2 == 0)
      return c[0];
    if (*p.lambda1 + 1 == *p.lambda2)
      return c[1];
    break;
  case FamilyId::G12:
    if (*p.lambda == -1)
      return c[0];
    break;
  case FamilyId::G13:
  case FamilyId::G16:
    if (*p.lambda < 0)
      return c[0];
    break;
  case FamilyId::G14:
    if (*p.lambda2 < 0)
      return c[0];
    if (*p.lambda1 == -1)
      return c[1];
    break;
  default:
    break;
  }
  return std::nullopt;
}

TripletSpec triplet(FamilyId id, const FamilyParams &p) {
  const Rational l = val(p.lambda), l1 = val(p.lambda1), l2 = val(p.lambda2);
  TripletSpec t;
  switch (id) {
  case FamilyId::G1:
    t.adX = diag(1, -1, 0, 0, 1);
    t.adY = diag(0, 0, 1, 0, 1);
    t.xy = {0, 0, 0, l, 0};
    break;
  case FamilyId::G2:
    t.adX = diag(1, 0, 0, 1, 1);
    t.adY = diag(0, 0, 1, 0, 1);
    break;
  case FamilyId::G3:
    t.adX = diag(0, 1, 0, 1, 0);
    t.adY = diag(0, 0, 1, 0, 1);
    break;
  case FamilyId::G4:
    t.adX = diag(1, 0, l1, 1, 1 + l1);
    t.adY = diag(0, 1, l2, 1, l2);
    break;
  case FamilyId::G5:
    t.adX = diag(0, 0, 1, 0, 1);
    t.adY = plusE(diag(1, 1, 0, 2, 1), 1, 2);
    break;
  case FamilyId::G6:
    t.adX = diag(1, 1, l, 2, 1 + l);
    t.adY = plusE(diag(0, 0, 1, 0, 1), 1, 2);
    break;
  case FamilyId::G7:
    t.adX = diag(0, 1, 1, 1, 1);
    t.adY = plusE(diag(1, 1, 0, 2, 1), 2, 5);
    break;
  case FamilyId::G8:
    t.adX = diag(1, 1 + l, l, 2 + l, 1 + l);
    t.adY = plusE(diag(0, 1, 1, 1, 1), 2, 5);
    break;
  case FamilyId::G9:
    t.adX = diag(0, 0, 1, 0, 1);
    t.adY = plusE(diag(0, 1, 0, 1, 0), 3, 5);
    break;
  case FamilyId::G10:
    t.adX = diag(0, 1, l, 1, l);
    t.adY = plusE(diag(0, 0, 1, 0, 1), 3, 5);
    break;
  case FamilyId::G11:
    t.adX = diag(0, 1, 1, 1, 1);
    t.adY = plusE(plusE(diag(1, 0, 0, 1, 1), 2, 3), 4, 5);
    break;
  case FamilyId::G12:
    t.adX = diag(1, l, l, 1 + l, 1 + l);
    t.adY = plusE(plusE(diag(0, 1, 1, 1, 1), 2, 3), 4, 5);
    break;
  case FamilyId::G13:
    t.adX = diag(0, 1, 1, 1, 1);
    t.adY = blocks(l, 0, 1, l, 1);
    break;
  case FamilyId::G14:
    t.adX = diag(1, l1, l1, 1 + l1, 1 + l1);
    t.adY = blocks(0, l2, 1, l2, 1);
    break;
  case FamilyId::G15:
    t.adX = blocks(0, 0, 1, 0, 1);
    t.adY = plusE(plusE(diag(0, 1, 1, 1, 1), 2, 5), 3, 4, -1);
    break;
  case FamilyId::G16:
    t.adX = plusE(blocks(0, 0, 1, 0, 1), 2, 5);
    t.adY = plusE(plusE(diag(0, 1, 1, 1, 1), 2, 5, l), 3, 4, -l);
    break;
  }
  return t;
}

LieAlgebra7 build_family(FamilyId id, const FamilyParams &p) {
  if (auto bad = validate_params(id, p))
    throw ConstraintViolation(to_string(id) + ": " + *bad);

  const TripletSpec t = triplet(id, p);
  LieAlgebra7 alg(to_string(id));
  auto unit = [](int k) {
    RVec7 v{};
    v[k] = 1;
    return v;
  };
  alg.set_bracket(X1, X2, unit(X4));
  alg.set_bracket(X1, X3, unit(X5));
  for (int j = 0; j < 5; ++j) {
    RVec7 vx{}, vy{};
    for (int k = 0; k < 5; ++k) {
      vx[k] = t.adX[j][k];
      vy[k] = t.adY[j][k];
    }
    alg.set_bracket(XX, j, vx);
    alg.set_bracket(YY, j, vy);
  }
  RVec7 xy{};
  for (int k = 0; k < 5; ++k)
    xy[k] = t.xy[k];
  alg.set_bracket(XX, YY, xy);
  return alg;
}

std::vector<FamilyInfo> list_families() {
  std::vector<FamilyInfo> out;
  for (FamilyId id : all_families())
    out.push_back({id, param_shape(id).arity(), class_of(id), "g_{5,2}", conditions(id)});
  return out;
}

} // namespace gmd
