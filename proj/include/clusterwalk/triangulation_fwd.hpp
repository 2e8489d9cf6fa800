#pragma once

namespace clusterwalk {
struct Triangulation;
}
