#include <algorithm>

#include "jetspace/cli.hpp"

namespace jetspace {

namespace {

Point pt(std::initializer_list<int> coords) {
  Point p;
  for (int c : coords) p.push_back(Rational(c));
  return p;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"line", "smooth line x = 0 in the plane",
       "# Smooth line in the plane.\n"
       "ring x, y\n"
       "ideal X = x\n"
       "point 0, 0\n"
       "command check-main cross_check=1 e_max=3\n",
       pt({0, 0})},
      {"node", "node xy = 0",
       "# Node: two transversal lines.\n"
       "ring x, y\n"
       "ideal X = x*y\n"
       "point 0, 0\n"
       "command check-main cross_check=1 e_max=3\n",
       pt({1, 0})},
      {"cusp", "cusp x^2 = y^3",
       "# Ordinary cusp.\n"
       "ring x, y\n"
       "ideal X = x^2 - y^3\n"
       "point 0, 0\n"
       "command check-main cross_check=1 e_max=3\n",
       pt({1, 1})},
      {"tacnode", "tacnode x^2 = y^4",
       "# Tacnode: two smooth branches x = y^2 and x = -y^2.\n"
       "ring x, y\n"
       "ideal X = x^2 - y^4\n"
       "point 0, 0\n"
       "command check-main cross_check=1 e_max=3\n",
       pt({1, 1})},
      {"cone", "quadric cone xy = zw in A^4",
       "# Cone over a smooth quadric surface.\n"
       "ring x, y, z, w\n"
       "ideal X = x*y - z*w\n"
       "point 0, 0, 0, 0\n"
       "command lambda m_max=2 e_max=2\n",
       pt({1, 1, 1, 1})},
      {"umbrella", "Whitney umbrella x^2 = y^2 z",
       "# Whitney umbrella: singular along the z-axis.\n"
       "ring x, y, z\n"
       "ideal X = x^2 - y^2*z\n"
       "point 0, 0, 0\n"
       "command check-main cross_check=1 e_max=3\n",
       pt({1, 1, 1})},
      {"sphere-cone", "cone x^2 + y^2 + z^2 = 0",
       "# Quadric cone with no real points besides the vertex.\n"
       "ring x, y, z\n"
       "ideal X = x^2 + y^2 + z^2\n"
       "point 0, 0, 0\n"
       "command check-main cross_check=1 e_max=3\n",
       std::nullopt},
      {"double-line", "curve (x + y)^2 (x - y) = 0",
       "# A reduced line and a double line through the origin.\n"
       "ring x, y\n"
       "ideal X = (x + y)^2*(x - y)\n"
       "point 0, 0\n"
       "command check-main cross_check=1 e_max=3\n",
       pt({1, 1})},
      {"plane-in-cone", "plane X = {x = z = 0} and hypersurface X' = {xy = zw} in A^4",
       "# The plane X inside the quadric cone X'.\n"
       "ring x, y, z, w\n"
       "ideal X = x, z\n"
       "ideal Xp = x*y - z*w\n"
       "point 0, 0, 0, 0\n"
       "command ord-blowup ideal=X*Xp\n",
       std::nullopt},
      {"lct-maximal", "maximal ideal (x, y) of the plane",
       "ring x, y\n"
       "ideal a = x, y\n"
       "command lct-bound a=a M=3\n",
       std::nullopt},
      {"lct-square", "(x^2) on the line",
       "ring x\n"
       "ideal a = x^2\n"
       "command lct-bound a=a M=2\n",
       std::nullopt},
      {"lct-monomial", "monomial ideal (x^2, y^3) of the plane",
       "ring x, y\n"
       "ideal a = x^2, y^3\n"
       "command lct-bound a=a M=6\n",
       std::nullopt},
  };
  return entries;
}

const CorpusEntry* find_corpus_entry(std::string_view name) {
  const auto& all = corpus();
  const auto it = std::find_if(all.begin(), all.end(), [&](const CorpusEntry& e) { return e.name == name; });
  return it == all.end() ? nullptr : &*it;
}

}  // namespace jetspace
