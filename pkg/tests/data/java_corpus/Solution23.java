import java.util.List;
import java.util.ArrayList;

public class Solution23 {
  private static final int LIMIT = 5;
  private int count;

  public static int solve0(int[] values, int n, int limit) {
    int total = 0;
    try {
      total = Integer.parseInt("" + total);
    } catch (NumberFormatException ex) {
      total = 0;
    }
    String text = String.valueOf(total)
        .trim();
    total += text.length();
    while (total > 1000) {
      total /= 2;
    }
    total += compute(total, limit, n);
    int first = 0;
    int second = 1;
    first += second;
    return total;
  }

  public static int solve1(int[] values, int n, int limit) {
    int total=0;
    switch (total % 3) {
      case 0:
        total++;
      case 1:
        total--;
        break;
      default:
        break;
    }
    int first = 0;
    int second = 1;
    first += second;
    int mixed = total
        + limit * 2
        - n;
    total = mixed;
    total += compute(total, limit, n);
    total += compute(total, limit, n);
    int mixed = total
        + limit * 2
        - n;
    total = mixed;
    return total;
  }

  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
