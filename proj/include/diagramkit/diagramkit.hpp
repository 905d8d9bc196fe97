// Umbrella header.

#ifndef DIAGRAMKIT_DIAGRAMKIT_HPP_
#define DIAGRAMKIT_DIAGRAMKIT_HPP_

#include "annular.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "ppbraid.hpp"
#include "presentation.hpp"
#include "squier.hpp"

#endif  // DIAGRAMKIT_DIAGRAMKIT_HPP_
