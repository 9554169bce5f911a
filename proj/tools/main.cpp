#include <cstdio>

int main() {
  std::puts("cmvskew: subcommands not wired yet");
  return 0;
}
