// Deletes the marked edge of a map given on the command line (or of the
// lollipop map by default) and prints what is left.

#include <iostream>
#include <string>
#include <variant>

#include "gluing/gluing.hpp"

int main(int argc, char** argv) {
  using namespace gluing;
  const std::string text = argc > 1 ? argv[1] : "n=2; faces=[3,1]; iota=[(1,3),(2,4)]";
  try {
    const MarkedMap m = MarkedMap::parse(text);
    std::cout << "input:  " << m.serialize() << "  genus " << genus_of(m) << '\n';
    const SurgeryResult r = delete_marked_edge(m);
    std::visit(
        [](const auto& out) {
          using T = std::decay_t<decltype(out)>;
          if constexpr (std::is_same_v<T, Split>) {
            std::cout << "split:  " << out.first.serialize() << "\n        "
                      << out.second.serialize() << '\n';
          } else {
            std::cout << (std::is_same_v<T, FaceMerge> ? "merge:  " : "drop:   ")
                      << out.map.serialize() << "  genus " << genus_of(out.map) << '\n';
          }
        },
        r);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
