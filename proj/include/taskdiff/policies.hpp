#pragma once

#include <string>

#include "taskdiff/program.hpp"

namespace taskdiff {

// Hand-assembled reference policies for the built-in tasks. Each is an
// ordinary program over the reference machine; nothing here has semantics
// the enumeration could not in principle reach.
namespace policies {

// Single HALT: the do-nothing policy.
Program halt();

// Read the observation once, act it, halt. Solves per-episode-constant
// imitation with the persistent-action convention.
Program copy_once();

// Copy the observation to the action every loop turn, forever.
Program copy_loop();

// Emit one random bit as the action, halt / forever.
Program random_choice();
Program random_loop();

// addition: answer obs[0] + obs[1].
Program adder();

// Emit a fixed digit string, then halt.
Program rote(const std::string& digits);

// maze: alternate +x and +y moves forever.
Program staircase();

// response_time: poll every tick until the signal, then answer its side.
Program poller();
// response_time: poll on a sleep cadence (cheaper in counted steps).
Program sleep_poller(int sleep_ticks);

// numerousness: Monte-Carlo darkness comparison with n sample points per
// panel; picks the panel with fewer black samples, ties to the left.
Program monte_carlo_darkness(int points);

// Resolve a preset by name: "halt", "copy", "copy_loop", "random",
// "random_loop", "adder", "staircase", "poller", "sleep_poller",
// "mc<N>" (e.g. mc100), "rote:<digits>". Throws std::invalid_argument.
Program by_name(const std::string& name);

} // namespace policies
} // namespace taskdiff
