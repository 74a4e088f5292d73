#include "utimage/words.hpp"

namespace utimage {

WordPoly WordPoly::constant(const Scalar& c) {
  WordPoly p(c.field());
  p.add_term({}, c);
  return p;
}

WordPoly WordPoly::letter(const FieldDescriptor& field, std::uint8_t var) {
  WordPoly p(field);
  p.add_term({var}, Scalar::one(field));
  return p;
}

void WordPoly::add_term(const Word& word, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    terms_.emplace(word, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WordPoly WordPoly::operator+(const WordPoly& rhs) const {
  if (field_ != rhs.field_) fail(Errc::FieldMismatch, "mixed fields in word sum");
  WordPoly out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add_term(w, c);
  return out;
}

WordPoly WordPoly::operator-(const WordPoly& rhs) const {
  if (field_ != rhs.field_) fail(Errc::FieldMismatch, "mixed fields in word difference");
  WordPoly out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add_term(w, -c);
  return out;
}

WordPoly WordPoly::operator*(const WordPoly& rhs) const {
  if (field_ != rhs.field_) fail(Errc::FieldMismatch, "mixed fields in word product");
  WordPoly out(field_);
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : rhs.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

WordPoly WordPoly::scaled(const Scalar& c) const {
  WordPoly out(field_);
  for (const auto& [w, cw] : terms_) out.add_term(w, cw * c);
  return out;
}

}  // namespace utimage
