#include "torifol/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "torifol/errors.hpp"

namespace torifol {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::RedundantGenerator: return "RedundantGenerator";
    case ErrorKind::Overlap: return "Overlap";
    case ErrorKind::DanglingWall: return "DanglingWall";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::OutsideSupport: return "OutsideSupport";
    case ErrorKind::UnknownRay: return "UnknownRay";
    case ErrorKind::UnknownCone: return "UnknownCone";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NotQCartier: return "NotQCartier";
    case ErrorKind::NonSimplicialFan: return "NonSimplicialFan";
    case ErrorKind::NonSmoothFan: return "NonSmoothFan";
    case ErrorKind::NonZeroDelta: return "NonZeroDelta";
    case ErrorKind::NegativeDelta: return "NegativeDelta";
    case ErrorKind::NotLogCanonical: return "NotLogCanonical";
    case ErrorKind::NotProjective: return "NotProjective";
    case ErrorKind::NotExtremal: return "NotExtremal";
    case ErrorKind::IterationCap: return "IterationCap";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
  }
  return "Unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::Validation, "Rat: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::Validation, "Rat: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Int parse_int(std::string_view s) {
  if (!is_integer_text(s)) throw Error(ErrorKind::Parse, "malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  const Int num = parse_int(std::string_view(s).substr(0, slash));
  const std::string_view den_text = std::string_view(s).substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
  }
  const Int den = parse_int(den_text);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  return Rat(num, den);
}

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Int Rat::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Int Rat::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::int64_t Rat::to_int64() const {
  if (!is_integer()) throw std::overflow_error("Rat::to_int64: not an integer: " + str());
  const Int& n = value_.get_num();
  if (n < Int(std::numeric_limits<long>::min()) || n > Int(std::numeric_limits<long>::max())) {
    throw std::overflow_error("Rat::to_int64: out of range: " + str());
  }
  return n.get_si();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

GaussRat GaussRat::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty Gaussian rational");
  if (s.back() != 'i') return GaussRat(Rat::parse(s));
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_text;
  std::string im_text;
  if (split == std::string::npos) {
    im_text = body;
  } else {
    re_text = body.substr(0, split);
    im_text = body.substr(split);
  }
  Rat im;
  if (im_text.empty() || im_text == "+") {
    im = Rat(1);
  } else if (im_text == "-") {
    im = Rat(-1);
  } else {
    im = Rat::parse(im_text);
  }
  const Rat re = re_text.empty() ? Rat(0) : Rat::parse(re_text);
  return {re, im};
}

std::string GaussRat::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im_part;
  if (im_ == Rat(1)) {
    im_part = "i";
  } else if (im_ == Rat(-1)) {
    im_part = "-i";
  } else {
    im_part = im_.str() + "i";
  }
  if (re_.is_zero()) return im_part;
  if (im_part[0] == '-') return re_.str() + im_part;
  return re_.str() + "+" + im_part;
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  Rat re = re_ * o.re_ - im_ * o.im_;
  Rat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  const Rat n = o.norm();
  if (n.is_zero()) throw std::domain_error("GaussRat: division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

QVec to_qvec(const IntVec& v) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

GVec to_gvec(const QVec& v) { return {v.begin(), v.end()}; }

GVec to_gvec(const IntVec& v) {
  GVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(Rat(static_cast<long>(x)));
  return out;
}

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
  Rat s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
  }
  return s;
}

Rat dot(const QVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
  Rat s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (b[k] != 0 && !a[k].is_zero()) s += a[k] * Rat(static_cast<long>(b[k]));
  }
  return s;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

std::string to_string(const QVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

}  // namespace torifol
