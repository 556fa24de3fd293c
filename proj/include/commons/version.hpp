#pragma once

#define COMMONS_SIM_VERSION "0.1.0"
