import java.util.List;
import java.util.ArrayList;

public class Solution20 {
  private static final int LIMIT = 93;
  private int count;

  public static int solve0(int[] values, int n, int limit) {
    int total = 0;
    switch (total % 3) {
      case 0:
        total++;
        break;
      case 1:
        total--;
        break;
      default:
        break;
    }
    do {
      total--;
    } while (total > limit);
    return total;
  }

  public static int solve1(int[] values, int n, int limit) {
    int total = 0;
    long big = 100000L;
    total += (int) (big % 7);
    try {
      total = Integer.parseInt("" + total);
    } catch (NumberFormatException ex) {
      total = 0;
    }
    String text = String.valueOf(total)
        .trim();
    total += text.length();
    return total;
  }

  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
