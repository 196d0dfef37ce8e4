#pragma once

// Fixed formula corpus: 50 formulas covering every formula and game
// constructor (including dualised composites, which exercise the normal
// form), nesting depth at most 5, over atoms p/q/e and games g/h. The last
// four are the worked examples: the first three ship as hand-written
// graphs under examples/, the fourth is the known extracted form of the
// first.

#include <string>
#include <vector>

namespace glwtest {

inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> fs = {
      "p",
      "!p",
      "p & q",
      "p | q",
      "!(p & !q)",
      "<g>p",
      "<g^d>q",
      "<g u h>p",
      "<g n h>q",
      "<g ; h>p",
      "<g^*>p",
      "<g^x>q",
      "<p?>q",
      "<p!>q",
      "<(!p)?>q",
      "<(!q)!>p",
      "<g^d ; h>p",
      "<(g u h)^*>q",
      "<(g n h)^x>p",
      "<(g ; h)^*>(p | q)",
      "<g^* ; h>q",
      "<(g^*)^d>p",
      "<(g^x)^d>q",
      "<(g u h)^d>p",
      "<(g n h)^d>q",
      "<(g ; h)^d>p",
      "<(p? ; g)^*>q",
      "<(p! ; g)^x>q",
      "<(p & q)?>p",
      "<(p | !q)!>q",
      "<g><h>p",
      "<g>(p & <h>q)",
      "<g^*><h^x>p",
      "!<g>!p",
      "!<g^d>p",
      "<g>!q | <h>p",
      "<(g ; (p? u h))^*>p",
      "<p?^d>q",
      "<p!^d>q",
      "<(g^*)^x>p",
      "<((g u h^d) ; q?)^x>!p",
      "<h^d^d>p",
      "p & <(q? ; g)^*>!q",
      "<g n h^d>(p | <g^x>q)",
      "<(<g>p)? ; h>q",
      "<(<g^*>p)!>q",
      "<(p? ; g^*)^x>e",
      "<(p! ; g) u q?>e",
      "<(((!p)? ; g)^* u h)^x>e",
      "<(g^* n (p? ; p!))^x>e",
  };
  return fs;
}

}  // namespace glwtest
