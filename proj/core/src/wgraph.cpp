namespace jring {}
