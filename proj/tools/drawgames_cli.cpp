// Experiment runner: games, MAP-Elites, MCTS drawing, GA, and measures.
// Placeholder main while the library comes up; subcommands land with the
// library modules.

#include <cstdio>

int main() {
    std::puts("drawgames: no subcommands wired yet");
    return 1;
}
