#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pax/engagement_env.hpp"

namespace testing_support {

// Actions here are 0-based, unlike the config files.
inline pax::EnvConfig env_with(std::initializer_list<pax::Phase> phases,
                               pax::ScheduleMode mode = pax::ScheduleMode::clamp) {
  pax::EnvConfig c;
  c.schedule = phases;
  c.schedule_mode = mode;
  return c;
}

inline pax::EnvConfig fig1a_env() { return env_with({{5, -20.0, 200}, {1, -20.0, 400}}); }

inline pax::EnvConfig difficult_env() {
  return env_with({{1, -50.0, 1000}, {5, 50.0, 1000}}, pax::ScheduleMode::cycle);
}

}  // namespace testing_support
