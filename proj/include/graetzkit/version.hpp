#pragma once

#define GRAETZKIT_VERSION "0.1.0"
