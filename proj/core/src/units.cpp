#include "dotcavity/units.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace dotcavity {

std::string_view unit_name(Unit u) {
  switch (u) {
    case Unit::MilliEV: return "meV";
    case Unit::MegaHz: return "MHz";
    case Unit::Picosecond: return "ps";
    case Unit::PerPicosecond: return "1/ps";
    case Unit::Scalar: return "";
  }
  return "";
}

namespace {

[[noreturn]] void wrong_unit(std::string_view what, Unit got, std::string_view want) {
  std::string got_name = got == Unit::Scalar ? std::string("no unit suffix")
                                             : std::string(unit_name(got));
  throw std::invalid_argument(std::string(what) + ": expected " + std::string(want) +
                              ", got " + got_name);
}

double require(const Quantity& q, Unit want, std::string_view what) {
  if (q.unit != want) wrong_unit(what, q.unit, unit_name(want));
  return q.value;
}

}  // namespace

double require_mev(const Quantity& q, std::string_view what) { return require(q, Unit::MilliEV, what); }
double require_mhz(const Quantity& q, std::string_view what) { return require(q, Unit::MegaHz, what); }
double require_ps(const Quantity& q, std::string_view what) { return require(q, Unit::Picosecond, what); }
double require_per_ps(const Quantity& q, std::string_view what) { return require(q, Unit::PerPicosecond, what); }

double require_scalar(const Quantity& q, std::string_view what) {
  if (q.unit != Unit::Scalar) wrong_unit(what, q.unit, "a dimensionless value");
  return q.value;
}

double mev_from_mhz(double mhz, FrequencyToEnergy conv) {
  const double f_per_ps = mhz * 1e6 / 1e12;  // MHz -> 1/ps
  const double factor = conv == FrequencyToEnergy::TwoPiHbarF ? 2.0 * std::numbers::pi : 1.0;
  return factor * kHbarMeVPs * f_per_ps;
}

Quantity to_energy(const Quantity& q, FrequencyToEnergy conv, std::string_view what) {
  if (q.unit == Unit::MilliEV) return q;
  if (q.unit == Unit::MegaHz) return mev(mev_from_mhz(q.value, conv));
  wrong_unit(what, q.unit, "meV or MHz");
}

Quantity parse_quantity(std::string_view text) {
  size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  text = text.substr(a, b - a);
  if (text.empty()) throw std::invalid_argument("empty quantity");

  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin)
    throw std::invalid_argument("malformed quantity '" + std::string(text) + "'");

  std::string_view suffix(ptr, static_cast<size_t>(end - ptr));
  while (!suffix.empty() && std::isspace(static_cast<unsigned char>(suffix.front())))
    suffix.remove_prefix(1);

  if (suffix.empty()) return scalar(value);
  if (suffix == "meV") return mev(value);
  if (suffix == "MHz") return megahertz(value);
  if (suffix == "GHz") return megahertz(value * 1e3);
  if (suffix == "ps") return picoseconds(value);
  if (suffix == "ns") return picoseconds(value * 1e3);
  if (suffix == "/ps") return per_picosecond(value);
  if (suffix == "/ns") return per_picosecond(value / 1e3);
  throw std::invalid_argument("unknown unit suffix '" + std::string(suffix) +
                              "' in '" + std::string(text) + "'");
}

std::string format_quantity(const Quantity& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", q.value);
  std::string out(buf);
  if (q.unit != Unit::Scalar) {
    out += ' ';
    out += unit_name(q.unit);
  }
  return out;
}

}  // namespace dotcavity
