#pragma once

#include "mvwave/analysis.hpp"
#include "mvwave/core.hpp"
#include "mvwave/io.hpp"
#include "mvwave/reffun.hpp"
#include "mvwave/scene.hpp"
#include "mvwave/synth.hpp"
#include "mvwave/wavelet.hpp"
