#include "hexoct/character.hpp"

#include <algorithm>

#include "hexoct/error.hpp"

namespace hexoct {

const char* ico_class_name(IcoClass c) {
  switch (c) {
    case IcoClass::E: return "E";
    case IcoClass::C5: return "C5";
    case IcoClass::C5sq: return "C5^2";
    case IcoClass::C2: return "C2";
    case IcoClass::C3: return "C3";
  }
  return "?";
}

const char* ico_irrep_name(IcoIrrep r) {
  switch (r) {
    case IcoIrrep::A: return "A";
    case IcoIrrep::T1: return "T1";
    case IcoIrrep::T2: return "T2";
    case IcoIrrep::G: return "G";
    case IcoIrrep::H: return "H";
  }
  return "?";
}

QfElem ico_character(IcoIrrep irrep, IcoClass cls) {
  const QfElem tau = QfElem::tau();
  const QfElem one_minus_tau = QfElem(1) - tau;
  // rows: A, T1, T2, G, H; columns: E, C5, C5^2, C2, C3
  const std::array<std::array<QfElem, kIcoClasses>, kIcoIrreps> table{{
      {1, 1, 1, 1, 1},
      {3, tau, one_minus_tau, -1, 0},
      {3, one_minus_tau, tau, -1, 0},
      {4, -1, -1, 0, 1},
      {5, 0, 0, 1, -1},
  }};
  return table[static_cast<int>(irrep)][static_cast<int>(cls)];
}

std::string format_decomposition(const Multiplicities& m) {
  std::string out;
  for (int i = 0; i < kIcoIrreps; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (m[i] != 1) out += std::to_string(m[i]);
    out += ico_irrep_name(static_cast<IcoIrrep>(i));
  }
  return out.empty() ? "0" : out;
}

CharacterVector character_vector(const GroupSet& h, const SignedPerm& g2, const SignedPerm& g3) {
  if (!h.contains(g2) || !h.contains(g3))
    throw BadGenerators("generators are not members of the group");
  const SignedPerm c5 = g2 * g3;
  if (g2.order() != 2 || g3.order() != 3 || c5.order() != 5)
    throw BadGenerators("need |g2| = 2, |g3| = 3, |g2 g3| = 5");
  CharacterVector cv;
  cv.values = {SignedPerm().trace(), c5.trace(), (c5 * c5).trace(), g2.trace(), g3.trace()};
  return cv;
}

Multiplicities decompose_character(const CharacterVector& cv) {
  Multiplicities m{};
  for (int i = 0; i < kIcoIrreps; ++i) {
    QfElem sum;
    for (int c = 0; c < kIcoClasses; ++c) {
      // characters of A5 are real, so conjugation is a no-op
      sum += QfElem(kIcoClassSizes[c] * cv.values[c]) *
             ico_character(static_cast<IcoIrrep>(i), static_cast<IcoClass>(c));
    }
    sum /= QfElem(60);
    if (!sum.is_integer() || sgn(sum.rational_part()) < 0)
      throw NotACharacter(std::string("multiplicity of ") + ico_irrep_name(static_cast<IcoIrrep>(i)) +
                          " is " + sum.to_string());
    m[i] = static_cast<int>(sum.rational_part().get_num().get_si());
  }
  return m;
}

std::vector<IcoClass> element_class_labels(const GroupSet& h, const SignedPerm& g2, const SignedPerm& g3) {
  const SignedPerm c5 = g2 * g3;
  if (!h.contains(g2) || !h.contains(g3) || c5.order() != 5)
    throw BadGenerators("element_class_labels needs a (2,3,5) pair in h");
  std::vector<SignedPerm> c5_class;
  for (const auto& g : h) c5_class.push_back(conjugate(c5, g));
  std::sort(c5_class.begin(), c5_class.end());
  std::vector<IcoClass> labels;
  labels.reserve(h.size());
  for (const auto& x : h) {
    switch (x.order()) {
      case 1: labels.push_back(IcoClass::E); break;
      case 2: labels.push_back(IcoClass::C2); break;
      case 3: labels.push_back(IcoClass::C3); break;
      case 5:
        labels.push_back(std::binary_search(c5_class.begin(), c5_class.end(), x) ? IcoClass::C5
                                                                                : IcoClass::C5sq);
        break;
      default: throw BadGenerators("element order outside {1,2,3,5}");
    }
  }
  return labels;
}

}  // namespace hexoct
