#include <gentle/error.hpp>
#include <gentle/invariants.hpp>

#include <json.hpp>

#include <algorithm>

namespace gentle {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "unknown";
}

void SurfaceInvariants::check() const {
  if (genus < 0) throw Error(ErrorKind::SyntaxError, "genus must be non-negative");
  if (components.empty()) throw Error(ErrorKind::SyntaxError, "at least one boundary component is required");
  for (const auto& c : components)
    if (c.kind == ComponentKind::Mixed && c.stops < 1)
      throw Error(ErrorKind::SyntaxError, "mixed boundary components need at least one stop");
}

int SurfaceInvariants::mixed_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(),
                                        [](const auto& c) { return c.kind == ComponentKind::Mixed; }));
}

bool SurfaceInvariants::is_disc() const {
  return genus == 0 && components.size() == 1 && components[0].kind == ComponentKind::Mixed;
}

std::set<Rational> omega_set(const SurfaceInvariants& inv) {
  std::set<Rational> out{Rational(0)};
  for (std::size_t i = 0; i < inv.components.size(); ++i) {
    const auto& c = inv.components[i];
    if (c.kind != ComponentKind::Mixed) continue;
    if (!c.winding)
      throw Error(ErrorKind::MissingWinding, "component " + std::to_string(i) + " has no winding number");
    out.insert(make_rational(*c.winding, c.stops));
  }
  return out;
}

EntropyFunction serre_entropy(const SurfaceInvariants& inv) {
  std::set<Rational> omega = omega_set(inv);
  EntropyFunction f;
  if (inv.is_disc()) {
    f.slope_pos = f.slope_neg = 1 - make_rational(2, inv.components[0].stops);
    f.disc_special_case = true;
    return f;
  }
  f.slope_pos = 1 - *omega.begin();
  f.slope_neg = 1 - *omega.rbegin();
  return f;
}

EntropyFunction tau_entropy(const SurfaceInvariants& inv) {
  EntropyFunction f = serre_entropy(inv);
  f.slope_pos -= 1;
  f.slope_neg -= 1;
  return f;
}

SerreDimensions serre_dimensions(const SurfaceInvariants& inv) {
  if (inv.is_disc()) throw Error(ErrorKind::DiscNotCovered, "Serre dimensions are not defined here for the disc");
  std::set<Rational> omega = omega_set(inv);
  SerreDimensions d;
  d.upper = 1 - *omega.begin();
  d.lower = 1 - *omega.rbegin();
  d.equal = d.upper == d.lower;
  return d;
}

Verdict check_poincare_hopf(const SurfaceInvariants& inv) {
  long total = 0;
  for (const auto& c : inv.components) {
    if (!c.winding) return Verdict::Skipped;
    total += *c.winding + 2;
  }
  return total == 4 - 4L * inv.genus ? Verdict::Pass : Verdict::Fail;
}

IntegerPolynomial coxeter_polynomial_surface(const SurfaceInvariants& inv, int quiver_excess) {
  IntegerPolynomial product = IntegerPolynomial::constant(1);
  for (std::size_t i = 0; i < inv.components.size(); ++i) {
    const auto& c = inv.components[i];
    if (c.kind == ComponentKind::FullyStopped)
      throw Error(ErrorKind::FullyStoppedUnsupported, "fully stopped component " + std::to_string(i));
    if (!c.winding)
      throw Error(ErrorKind::MissingWinding, "component " + std::to_string(i) + " has no winding number");
    const Integer sign = (*c.winding % 2 == 0) ? 1 : -1;
    product = product * IntegerPolynomial::binomial(c.stops, sign);
  }
  const IntegerPolynomial t_minus_1 = IntegerPolynomial::binomial(1, 1);
  if (quiver_excess >= 0) return t_minus_1.pow(quiver_excess) * product;
  IntegerPolynomial q;
  if (!product.divide_exact(t_minus_1.pow(-quiver_excess), q))
    throw Error(ErrorKind::NotPolynomial,
                "(t-1)^" + std::to_string(-quiver_excess) + " does not divide " + product.to_string());
  return q;
}

Classification classify(const SurfaceInvariants& inv) {
  Classification c;
  c.is_disc = inv.is_disc();
  EntropyFunction f = serre_entropy(inv);
  c.all_windings_zero = std::all_of(inv.components.begin(), inv.components.end(), [](const auto& b) {
    return b.kind != ComponentKind::Mixed || *b.winding == 0;
  });
  c.entropy_is_t = !f.disc_special_case && f.slope_pos == 1 && f.slope_neg == 1;
  c.affine_A_trivial = inv.genus == 0 && inv.mixed_count() == 2 && c.all_windings_zero;
  if (c.entropy_is_t != c.all_windings_zero || c.all_windings_zero != c.affine_A_trivial)
    throw Error(ErrorKind::InconsistentInvariants,
                "zero windings, entropy t and affine type disagree; the invariants are not realisable");
  return c;
}

std::vector<Rational> evaluate_entropy(const EntropyFunction& f, const std::vector<Rational>& t_grid) {
  std::vector<Rational> out;
  out.reserve(t_grid.size());
  for (const auto& t : t_grid) out.push_back(f(t));
  return out;
}

std::string invariants_to_json(const SurfaceInvariants& inv) {
  nlohmann::ordered_json doc;
  doc["genus"] = inv.genus;
  doc["components"] = nlohmann::ordered_json::array();
  for (const auto& c : inv.components) {
    nlohmann::ordered_json j;
    if (c.kind == ComponentKind::FullyStopped) {
      j["fully_stopped"] = true;
      if (c.winding) j["winding"] = *c.winding;
    } else {
      j["stops"] = c.stops;
      if (c.winding) j["winding"] = *c.winding;
    }
    doc["components"].push_back(j);
  }
  return doc.dump();
}

SurfaceInvariants invariants_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
  SurfaceInvariants inv;
  if (!doc.is_object() || !doc.contains("genus") || !doc["genus"].is_number_integer())
    throw Error(ErrorKind::SyntaxError, "genus: expected an integer");
  inv.genus = doc["genus"].get<int>();
  if (!doc.contains("components") || !doc["components"].is_array())
    throw Error(ErrorKind::SyntaxError, "components: expected an array");
  for (std::size_t i = 0; i < doc["components"].size(); ++i) {
    const auto& j = doc["components"][i];
    const std::string where = "components[" + std::to_string(i) + "]";
    if (!j.is_object()) throw Error(ErrorKind::SyntaxError, where + ": expected an object");
    std::optional<int> w;
    if (j.contains("winding")) {
      if (!j["winding"].is_number_integer())
        throw Error(ErrorKind::SyntaxError, where + ".winding: expected an integer");
      w = j["winding"].get<int>();
    }
    if (j.value("fully_stopped", false)) {
      inv.components.push_back(BoundaryComponent::fully_stopped(w));
    } else {
      if (!j.contains("stops") || !j["stops"].is_number_integer())
        throw Error(ErrorKind::SyntaxError, where + ".stops: expected an integer");
      inv.components.push_back(BoundaryComponent::mixed(j["stops"].get<int>(), w));
    }
  }
  inv.check();
  return inv;
}

std::string entropy_to_json(const EntropyFunction& f) {
  nlohmann::ordered_json doc;
  doc["slope_pos"] = to_string(f.slope_pos);
  doc["slope_neg"] = to_string(f.slope_neg);
  doc["disc_special_case"] = f.disc_special_case;
  return doc.dump();
}

}  // namespace gentle
