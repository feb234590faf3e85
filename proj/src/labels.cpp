#include "ricciforge/labels.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace ricciforge {

BasisLabel BasisLabel::z() {
  BasisLabel l;
  l.kind = LabelKind::Z;
  l.text = "Z";
  return l;
}

BasisLabel BasisLabel::cartan(int simple_index, const std::string& root_name) {
  BasisLabel l;
  l.kind = LabelKind::CartanH;
  l.index = simple_index;
  l.text = "H[" + root_name + "]";
  return l;
}

BasisLabel BasisLabel::root_x(int root_id, const std::string& root_name) {
  BasisLabel l;
  l.kind = LabelKind::RootX;
  l.index = root_id;
  l.text = "X[" + root_name + "]";
  return l;
}

BasisLabel BasisLabel::root_y(int root_id, const std::string& root_name) {
  BasisLabel l;
  l.kind = LabelKind::RootY;
  l.index = root_id;
  l.text = "Y[" + root_name + "]";
  return l;
}

BasisLabel BasisLabel::monomial(const std::vector<int>& exps, bool imag) {
  BasisLabel l;
  l.kind = LabelKind::Monomial;
  l.exponents = exps;
  l.imag = imag;
  std::ostringstream os;
  os << "p[";
  for (size_t i = 0; i < exps.size(); ++i) {
    if (i) os << ",";
    os << exps[i];
  }
  os << "]";
  if (imag) os << "i";
  l.text = os.str();
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  return l;
}

BasisLabel BasisLabel::generic(const std::string& name) {
  BasisLabel l;
  l.kind = LabelKind::Generic;
  l.text = name;
  return l;
}

BasisLabel BasisLabel::parse(const std::string& text) {
  if (text == "Z") return z();
  auto bracket = [&](char prefix) {
    return text.size() > 2 && text[0] == prefix && text[1] == '[';
  };
  if (bracket('p')) {
    size_t close = text.find(']');
    if (close != std::string::npos) {
      std::vector<int> exps;
      std::string body = text.substr(2, close - 2);
      std::istringstream is(body);
      std::string tok;
      bool ok = true;
      while (std::getline(is, tok, ',')) {
        try {
          exps.push_back(std::stoi(tok));
        } catch (...) {
          ok = false;
          break;
        }
      }
      bool imag = close + 1 < text.size() && text[close + 1] == 'i';
      if (ok && !exps.empty()) {
        bool nonneg = true;
        for (int e : exps) nonneg = nonneg && e >= 0;
        if (nonneg) return monomial(exps, imag);
      }
    }
  }
  if (bracket('H') || bracket('X') || bracket('Y')) {
    size_t close = text.find(']');
    if (close == text.size() - 1) {
      std::string root = text.substr(2, close - 2);
      BasisLabel l;
      l.kind = text[0] == 'H' ? LabelKind::CartanH : (text[0] == 'X' ? LabelKind::RootX : LabelKind::RootY);
      l.text = text;
      return l;
    }
  }
  return generic(text);
}

void check_labels_distinct(const std::vector<BasisLabel>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l.text).second)
      throw std::invalid_argument("duplicate basis label: " + l.text);
}

}  // namespace ricciforge
