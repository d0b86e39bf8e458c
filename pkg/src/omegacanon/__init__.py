"""ω-regular languages as families of DFAs: normalized acceptance, the
diameter measure, natural colors, the colorful FDFA and Black & White
automata."""
